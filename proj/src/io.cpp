#include "gelfand/io.hpp"

#include <stdexcept>

namespace gelfand {

Json to_json(Rational const& r) { return r.to_string(); }

Json to_json(QPoly const& p) {
  Json out = Json::array();
  for (auto const& c : p.coefficients()) {
    out.push_back(c.get_str());
  }
  return out;
}

Json to_json(std::int64_t x) { return x; }

Json to_json(Permutation const& p) { return p.images(); }

Json to_json(PartialInjection const& p) { return p.images(); }

namespace {

Json points(Block b) {
  Json out = Json::array();
  for (int x = 0; x < 32; ++x) {
    if (b & (Block{1} << x)) {
      out.push_back(x + 1);
    }
  }
  return out;
}

}  // namespace

Json to_json(SetPartitionBijection const& x) {
  Json out = Json::array();
  for (auto [from, to] : x.blocks()) {
    out.push_back(Json::array({points(from), points(to)}));
  }
  return out;
}

Json to_json(Tableau const& t) { return t; }

Rational rational_from_json(Json const& j) {
  if (j.is_number_integer()) {
    return Rational(j.get<std::int64_t>());
  }
  if (!j.is_string()) {
    throw std::invalid_argument("rational must be a string or integer");
  }
  return Rational::parse(j.get<std::string>());
}

QPoly qpoly_from_json(Json const& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("QPoly must be an array of coefficients");
  }
  std::vector<BigInt> coeffs;
  for (auto const& c : j) {
    Rational r = rational_from_json(c);
    if (r.denominator() != 1) {
      throw std::invalid_argument("QPoly coefficients must be integers");
    }
    coeffs.push_back(r.numerator());
  }
  return QPoly(std::move(coeffs));
}

std::string csv_cell(Rational const& r) { return r.to_string(); }

std::string csv_cell(QPoly const& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    s += (k ? "," : "") + p.coefficients()[k].get_str();
  }
  return s + "]";
}

std::string csv_cell(std::int64_t x) { return std::to_string(x); }

}  // namespace gelfand
