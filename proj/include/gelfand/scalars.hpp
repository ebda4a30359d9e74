#ifndef GELFAND_SCALARS_HPP_
#define GELFAND_SCALARS_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gelfand {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(runtime/explicit)
  Rational(BigInt const& n);  // NOLINT(runtime/explicit)
  Rational(BigInt const& num, BigInt const& den);

  // Parses "p" or "p/q". Throws std::invalid_argument on malformed input or
  // a zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return _value.get_num(); }
  BigInt denominator() const { return _value.get_den(); }

  bool is_zero() const { return sgn(_value) == 0; }
  int sign() const { return sgn(_value); }

  Rational& operator+=(Rational const& that);
  Rational& operator-=(Rational const& that);
  Rational& operator*=(Rational const& that);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(Rational const& that);

  friend Rational operator+(Rational a, Rational const& b) { return a += b; }
  friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
  friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
  friend Rational operator/(Rational a, Rational const& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(Rational const& a, Rational const& b) {
    return a._value == b._value;
  }
  friend std::strong_ordering operator<=>(Rational const& a,
                                          Rational const& b) {
    int c = cmp(a._value, b._value);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  mpq_class const& raw() const { return _value; }

 private:
  explicit Rational(mpq_class v) : _value(std::move(v)) {}
  mpq_class _value = 0;
};

std::ostream& operator<<(std::ostream& os, Rational const& r);

// Univariate polynomial in the formal parameter q with integer coefficients,
// index = degree. Always trimmed: the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::int64_t c);  // NOLINT(runtime/explicit)
  QPoly(BigInt const& c);  // NOLINT(runtime/explicit)
  QPoly(std::initializer_list<std::int64_t> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);

  // The polynomial q^k.
  static QPoly q(unsigned k = 1);

  bool is_zero() const { return _coeffs.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(_coeffs.size()) - 1; }
  std::vector<BigInt> const& coefficients() const { return _coeffs; }
  BigInt coefficient(std::size_t k) const;

  QPoly& operator+=(QPoly const& that);
  QPoly& operator-=(QPoly const& that);
  QPoly& operator*=(QPoly const& that);
  QPoly operator-() const;

  friend QPoly operator+(QPoly a, QPoly const& b) { return a += b; }
  friend QPoly operator-(QPoly a, QPoly const& b) { return a -= b; }
  friend QPoly operator*(QPoly const& a, QPoly const& b);

  friend bool operator==(QPoly const& a, QPoly const& b) {
    return a._coeffs == b._coeffs;
  }

  // Exact evaluation at q = q0 (Horner).
  Rational specialize(Rational const& q0) const;

  // Human-readable form, e.g. "q^2 - 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> _coeffs;
};

std::ostream& operator<<(std::ostream& os, QPoly const& p);

enum class PolyOp { add, sub, mul };

QPoly qpoly_arith(QPoly const& a, QPoly const& b, PolyOp op);

inline Rational specialize(QPoly const& p, Rational const& q0) {
  return p.specialize(q0);
}

// Zero test used generically by the dense matrix template.
inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(Rational const& x) { return x.is_zero(); }
inline bool is_zero(QPoly const& x) { return x.is_zero(); }

}  // namespace gelfand

#endif  // GELFAND_SCALARS_HPP_
