#include "gelfand/certificate.hpp"

#include <stdexcept>

#include "gelfand/linalg.hpp"

namespace gelfand {

bool GelfandCertificate::is_gelfand() const {
  if (commutant_dimension != expected_simple_count) {
    return false;
  }
  if (expected_dimension && dimension != *expected_dimension) {
    return false;
  }
  for (auto const& [lambda, ip] : inner_products) {
    if (!(ip == Rational(1))) {
      return false;
    }
  }
  return true;
}

std::map<IntegerPartition, Rational> character_inner_products(
    std::map<IntegerPartition, Rational> const& chi, std::size_t n) {
  auto const classes = integer_partitions(n);
  for (auto const& mu : classes) {
    if (!chi.contains(mu)) {
      throw std::invalid_argument("character has no value at "
                                  + mu.to_string());
    }
  }
  Rational const                       order(factorial(n));
  std::map<IntegerPartition, Rational> out;
  for (auto const& lambda : classes) {
    Rational sum(0);
    for (auto const& mu : classes) {
      sum += Rational(class_size(mu)) * chi.at(mu)
             * Rational(mn_character(lambda, mu));
    }
    out.emplace(lambda, sum / order);
  }
  return out;
}

std::map<IntegerPartition, Rational> character_inner_products(
    std::map<IntegerPartition, std::int64_t> const& chi, std::size_t n) {
  std::map<IntegerPartition, Rational> q;
  for (auto const& [mu, v] : chi) {
    q.emplace(mu, Rational(v));
  }
  return character_inner_products(q, n);
}

GelfandCertificate certify(std::string model, std::vector<RatMatrix> const& mats,
                           std::size_t                expected_simple_count,
                           std::optional<std::size_t> expected_dimension) {
  GelfandCertificate c;
  c.model                 = std::move(model);
  c.dimension             = mats.empty() ? 0 : mats.front().rows();
  c.commutant_dimension   = commutant_dim(mats);
  c.expected_simple_count = expected_simple_count;
  c.expected_dimension    = expected_dimension;
  return c;
}

}  // namespace gelfand
