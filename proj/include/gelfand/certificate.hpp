#ifndef GELFAND_CERTIFICATE_HPP_
#define GELFAND_CERTIFICATE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/matrix.hpp"
#include "gelfand/partitions.hpp"
#include "gelfand/scalars.hpp"

namespace gelfand {

struct GelfandCertificate {
  std::string                model;
  std::size_t                dimension             = 0;
  std::size_t                commutant_dimension   = 0;
  std::size_t                expected_simple_count = 0;
  std::optional<std::size_t> expected_dimension;
  // <chi_V, chi^lambda>, for group models only.
  std::map<IntegerPartition, Rational> inner_products;

  // Commutant dimension equals the simple count, the dimension matches when
  // known, and every recorded inner product is 1.
  bool        is_gelfand() const;
  std::string verdict() const { return is_gelfand() ? "gelfand" : "not gelfand"; }
};

// (1/n!) sum_mu |C_mu| chi(mu) chi^lambda(mu) for every lambda of n; chi is
// given on cycle types. Throws std::invalid_argument if a cycle type of n is
// missing.
std::map<IntegerPartition, Rational> character_inner_products(
    std::map<IntegerPartition, Rational> const& chi, std::size_t n);
std::map<IntegerPartition, Rational> character_inner_products(
    std::map<IntegerPartition, std::int64_t> const& chi, std::size_t n);

// Fills in the dimension and the commutant dimension of the algebra spanned
// by mats.
GelfandCertificate certify(std::string model, std::vector<RatMatrix> const& mats,
                           std::size_t                expected_simple_count,
                           std::optional<std::size_t> expected_dimension = {});

}  // namespace gelfand

#endif  // GELFAND_CERTIFICATE_HPP_
