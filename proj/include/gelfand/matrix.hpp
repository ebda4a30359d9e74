#ifndef GELFAND_MATRIX_HPP_
#define GELFAND_MATRIX_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gelfand/scalars.hpp"

namespace gelfand {

// Dense row-major matrix over an exact scalar type (std::int64_t, Rational
// or QPoly). Products skip zero entries, which matters because every model
// matrix in this library has at most two nonzero entries per column.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _data(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = T(1);
    }
    return m;
  }

  std::size_t rows() const { return _rows; }
  std::size_t cols() const { return _cols; }
  bool is_square() const { return _rows == _cols; }

  T& operator()(std::size_t r, std::size_t c) { return _data[r * _cols + c]; }
  T const& operator()(std::size_t r, std::size_t c) const {
    return _data[r * _cols + c];
  }

  Matrix& operator+=(Matrix const& that) {
    check_same_shape(that);
    for (std::size_t k = 0; k < _data.size(); ++k) {
      if (!is_zero(that._data[k])) {
        _data[k] += that._data[k];
      }
    }
    return *this;
  }

  Matrix& operator-=(Matrix const& that) {
    check_same_shape(that);
    for (std::size_t k = 0; k < _data.size(); ++k) {
      if (!is_zero(that._data[k])) {
        _data[k] -= that._data[k];
      }
    }
    return *this;
  }

  friend Matrix operator+(Matrix a, Matrix const& b) { return a += b; }
  friend Matrix operator-(Matrix a, Matrix const& b) { return a -= b; }

  friend Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a._cols != b._rows) {
      throw std::invalid_argument("Matrix: inner dimensions differ");
    }
    Matrix c(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        T const& aik = a(i, k);
        if (is_zero(aik)) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          T const& bkj = b(k, j);
          if (!is_zero(bkj)) {
            c(i, j) += aik * bkj;
          }
        }
      }
    }
    return c;
  }

  friend Matrix operator*(T const& s, Matrix m) {
    for (auto& x : m._data) {
      if (!is_zero(x)) {
        x = s * x;
      }
    }
    return m;
  }

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
  }

  bool is_zero_matrix() const {
    for (auto const& x : _data) {
      if (!is_zero(x)) {
        return false;
      }
    }
    return true;
  }

  std::size_t nonzeros_in_column(std::size_t c) const {
    std::size_t count = 0;
    for (std::size_t r = 0; r < _rows; ++r) {
      if (!is_zero((*this)(r, c))) {
        ++count;
      }
    }
    return count;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(_rows, _cols); ++i) {
      t += (*this)(i, i);
    }
    return t;
  }

  // Entrywise image under f, e.g. specialization of a QPoly matrix.
  template <typename F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<T const&>()))> {
    Matrix<decltype(f(std::declval<T const&>()))> out(_rows, _cols);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        out(r, c) = f((*this)(r, c));
      }
    }
    return out;
  }

  // Principal submatrix on the given (ordered) index set.
  Matrix submatrix(std::vector<std::size_t> const& idx) const {
    Matrix out(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t c = 0; c < idx.size(); ++c) {
        out(r, c) = (*this)(idx[r], idx[c]);
      }
    }
    return out;
  }

 private:
  void check_same_shape(Matrix const& that) const {
    if (_rows != that._rows || _cols != that._cols) {
      throw std::invalid_argument("Matrix: shapes differ");
    }
  }

  std::size_t    _rows = 0;
  std::size_t    _cols = 0;
  std::vector<T> _data;
};

using IntMatrix   = Matrix<std::int64_t>;
using RatMatrix   = Matrix<Rational>;
using QPolyMatrix = Matrix<QPoly>;

// Location and values of the first entry where two matrices disagree.
template <typename T>
struct Mismatch {
  std::size_t row;
  std::size_t col;
  T           lhs;
  T           rhs;
};

template <typename T>
std::optional<Mismatch<T>> first_mismatch(Matrix<T> const& a,
                                          Matrix<T> const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("first_mismatch: shapes differ");
  }
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!(a(r, c) == b(r, c))) {
        return Mismatch<T>{r, c, a(r, c), b(r, c)};
      }
    }
  }
  return std::nullopt;
}

inline RatMatrix to_rational(IntMatrix const& m) {
  return m.map([](std::int64_t x) { return Rational(x); });
}

inline RatMatrix specialize(QPolyMatrix const& m, Rational const& q0) {
  return m.map([&q0](QPoly const& p) { return p.specialize(q0); });
}

}  // namespace gelfand

#endif  // GELFAND_MATRIX_HPP_
