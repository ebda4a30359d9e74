#ifndef GELFAND_PARTITIONS_HPP_
#define GELFAND_PARTITIONS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gelfand/permutation.hpp"
#include "gelfand/scalars.hpp"

namespace gelfand {

// Weakly decreasing list of positive integers.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly
  // decreasing.
  explicit IntegerPartition(std::vector<int> parts);

  std::vector<int> const& parts() const { return _parts; }
  std::size_t             length() const { return _parts.size(); }
  int                     size() const;
  int operator[](std::size_t i) const { return _parts[i]; }

  IntegerPartition conjugate() const;
  // Number of columns of odd length in the Young diagram.
  std::size_t odd_column_count() const;

  friend bool operator==(IntegerPartition const&,
                         IntegerPartition const&) = default;
  friend auto operator<=>(IntegerPartition const& a,
                          IntegerPartition const& b) {
    return a._parts <=> b._parts;
  }

  // "(3,1)"; the empty partition prints as "()".
  std::string to_string() const;

 private:
  std::vector<int> _parts;
};

std::ostream& operator<<(std::ostream& os, IntegerPartition const& p);

// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<IntegerPartition> integer_partitions(std::size_t n);

// p(n)
std::uint64_t partition_count(std::size_t n);

// f^lambda by the hook-length formula.
std::uint64_t syt_count(IntegerPartition const& lambda);

// Irreducible character chi^lambda at the class of cycle type mu, by the
// Murnaghan-Nakayama rule. Throws std::invalid_argument if |lambda| != |mu|.
std::int64_t mn_character(IntegerPartition const& lambda,
                          IntegerPartition const& mu);

// z_mu = prod_i i^{m_i} m_i!
BigInt centralizer_size(IntegerPartition const& mu);
// n! / z_mu
BigInt class_size(IntegerPartition const& mu);
BigInt factorial(std::size_t n);

IntegerPartition cycle_type(Permutation const& p);
// The permutation (1 .. mu_1)(mu_1+1 .. mu_1+mu_2)...
Permutation class_representative(IntegerPartition const& mu);

}  // namespace gelfand

#endif  // GELFAND_PARTITIONS_HPP_
