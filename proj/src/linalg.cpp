#include "gelfand/linalg.hpp"

#include <stdexcept>

namespace gelfand {

RrefResult rref(RatMatrix const& m) {
  RatMatrix                a = m;
  std::vector<std::size_t> pivots;
  std::size_t              row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) {
      ++p;
    }
    if (p == a.rows()) {
      continue;
    }
    if (p != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::swap(a(p, c), a(row, c));
      }
    }
    Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) {
      if (!a(row, c).is_zero()) {
        a(row, c) *= inv;
      }
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) {
        continue;
      }
      Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) {
          a(r, c) -= f * a(row, c);
        }
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {pivots.size(), std::move(a), std::move(pivots)};
}

std::size_t rank(RatMatrix const& m) {
  return rref(m).rank;
}

namespace {

// a - f * b over sorted sparse rows.
SparseEchelon::Row axpy(SparseEchelon::Row const& a,
                        Rational const&           f,
                        SparseEchelon::Row const& b) {
  SparseEchelon::Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (!v.is_zero()) {
        out.emplace_back(a[i].first, std::move(v));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add_row(Row row) {
  while (!row.empty()) {
    auto it = _pivots.find(row.front().first);
    if (it == _pivots.end()) {
      break;
    }
    Rational f = row.front().second;
    row        = axpy(row, f, it->second);
  }
  if (row.empty()) {
    return false;
  }
  Rational inv = Rational(1) / row.front().second;
  for (auto& [c, v] : row) {
    v *= inv;
  }
  std::size_t lead = row.front().first;
  _pivots.emplace(lead, std::move(row));
  return true;
}

std::size_t commutant_dim(std::vector<RatMatrix> const& mats) {
  if (mats.empty()) {
    throw std::invalid_argument("commutant_dim: no matrices");
  }
  std::size_t const d = mats.front().rows();
  for (auto const& m : mats) {
    if (m.rows() != d || m.cols() != d) {
      throw std::invalid_argument("commutant_dim: matrices must be square "
                                  "of equal size");
    }
  }
  // Unknown X(i, k) has index i * d + k. Equation (i, j) of XM - MX = 0 is
  //   sum_k X(i,k) M(k,j) - sum_k M(i,k) X(k,j) = 0.
  SparseEchelon echelon(d * d);
  for (auto const& m : mats) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        std::map<std::size_t, Rational> coeffs;
        for (std::size_t k = 0; k < d; ++k) {
          if (!m(k, j).is_zero()) {
            coeffs[i * d + k] += m(k, j);
          }
          if (!m(i, k).is_zero()) {
            coeffs[k * d + j] -= m(i, k);
          }
        }
        SparseEchelon::Row row;
        for (auto& [c, v] : coeffs) {
          if (!v.is_zero()) {
            row.emplace_back(c, std::move(v));
          }
        }
        if (!row.empty()) {
          echelon.add_row(std::move(row));
        }
      }
    }
  }
  return d * d - echelon.rank();
}

}  // namespace gelfand
