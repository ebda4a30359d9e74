#include "gelfand/scalars.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gelfand {

namespace {

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) {
    throw std::invalid_argument("malformed integer literal: " + s);
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw std::invalid_argument("malformed integer literal: " + s);
    }
  }
  if (s[0] == '+') {
    s.erase(0, 1);
  }
  return BigInt(s, 10);
}

}  // namespace

////////////////////////////////////////////////////////////////////////
// Rational
////////////////////////////////////////////////////////////////////////

Rational::Rational(std::int64_t n) : _value(static_cast<long>(n)) {}

Rational::Rational(BigInt const& n) : _value(n) {}

Rational::Rational(BigInt const& num, BigInt const& den) {
  if (den == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  _value = mpq_class(num, den);
  _value.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("Rational: zero denominator in '"
                                + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational& Rational::operator+=(Rational const& that) {
  _value += that._value;
  return *this;
}

Rational& Rational::operator-=(Rational const& that) {
  _value -= that._value;
  return *this;
}

Rational& Rational::operator*=(Rational const& that) {
  _value *= that._value;
  return *this;
}

Rational& Rational::operator/=(Rational const& that) {
  if (that.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  _value /= that._value;
  return *this;
}

Rational Rational::operator-() const {
  return Rational(mpq_class(-_value));
}

std::string Rational::to_string() const {
  if (_value.get_den() == 1) {
    return _value.get_num().get_str();
  }
  return _value.get_num().get_str() + "/" + _value.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, Rational const& r) {
  return os << r.to_string();
}

////////////////////////////////////////////////////////////////////////
// QPoly
////////////////////////////////////////////////////////////////////////

QPoly::QPoly(std::int64_t c) {
  if (c != 0) {
    _coeffs.emplace_back(static_cast<long>(c));
  }
}

QPoly::QPoly(BigInt const& c) {
  if (c != 0) {
    _coeffs.push_back(c);
  }
}

QPoly::QPoly(std::initializer_list<std::int64_t> coeffs) {
  _coeffs.reserve(coeffs.size());
  for (auto c : coeffs) {
    _coeffs.emplace_back(static_cast<long>(c));
  }
  trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : _coeffs(std::move(coeffs)) {
  trim();
}

QPoly QPoly::q(unsigned k) {
  std::vector<BigInt> c(k + 1, BigInt(0));
  c[k] = 1;
  return QPoly(std::move(c));
}

BigInt QPoly::coefficient(std::size_t k) const {
  return k < _coeffs.size() ? _coeffs[k] : BigInt(0);
}

void QPoly::trim() {
  while (!_coeffs.empty() && _coeffs.back() == 0) {
    _coeffs.pop_back();
  }
}

QPoly& QPoly::operator+=(QPoly const& that) {
  if (that._coeffs.size() > _coeffs.size()) {
    _coeffs.resize(that._coeffs.size(), BigInt(0));
  }
  for (std::size_t k = 0; k < that._coeffs.size(); ++k) {
    _coeffs[k] += that._coeffs[k];
  }
  trim();
  return *this;
}

QPoly& QPoly::operator-=(QPoly const& that) {
  if (that._coeffs.size() > _coeffs.size()) {
    _coeffs.resize(that._coeffs.size(), BigInt(0));
  }
  for (std::size_t k = 0; k < that._coeffs.size(); ++k) {
    _coeffs[k] -= that._coeffs[k];
  }
  trim();
  return *this;
}

QPoly operator*(QPoly const& a, QPoly const& b) {
  if (a.is_zero() || b.is_zero()) {
    return QPoly();
  }
  std::vector<BigInt> c(a._coeffs.size() + b._coeffs.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a._coeffs.size(); ++i) {
    if (a._coeffs[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b._coeffs.size(); ++j) {
      c[i + j] += a._coeffs[i] * b._coeffs[j];
    }
  }
  return QPoly(std::move(c));
}

QPoly& QPoly::operator*=(QPoly const& that) {
  *this = *this * that;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& c : r._coeffs) {
    c = -c;
  }
  return r;
}

Rational QPoly::specialize(Rational const& q0) const {
  Rational acc(0);
  for (auto it = _coeffs.rbegin(); it != _coeffs.rend(); ++it) {
    acc = acc * q0 + Rational(*it);
  }
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = _coeffs.size(); k-- > 0;) {
    BigInt const& c = _coeffs[k];
    if (c == 0) {
      continue;
    }
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) {
        os << "-";
      }
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
    }
    if (k >= 1) {
      os << "q";
      if (k > 1) {
        os << "^" << k;
      }
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, QPoly const& p) {
  return os << p.to_string();
}

QPoly qpoly_arith(QPoly const& a, QPoly const& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  throw std::invalid_argument("qpoly_arith: unknown operation");
}

}  // namespace gelfand
