#include "gelfand/qrook_model.hpp"

#include <algorithm>
#include <stdexcept>

#include "gelfand/involutions.hpp"

namespace gelfand {

Permutation psi_embed(std::vector<int> const& A, PartialInjection const& w) {
  std::vector<int> sorted(A);
  std::sort(sorted.begin(), sorted.end());
  if (w.domain() != sorted || w.image() != sorted) {
    throw std::invalid_argument("psi_embed: " + w.to_string()
                                + " is not supported exactly on the "
                                  "given set");
  }
  std::vector<int> im(w.size());
  for (std::size_t x = 1; x <= w.size(); ++x) {
    int y     = w(static_cast<int>(x));
    im[x - 1] = y != 0 ? y : static_cast<int>(x);
  }
  return Permutation(std::move(im));
}

Combination<PartialInjection> circ_act(std::size_t             i,
                                       PartialInjection const& w,
                                       HeckeRule               rule) {
  int const a = static_cast<int>(i);
  if (i < 1 || i >= w.size() || !w.in_domain(a) || !w.in_domain(a + 1)) {
    throw std::invalid_argument("circ_act: need i, i+1 in dom(w), got i = "
                                + std::to_string(i) + ", w = "
                                + w.to_string());
  }
  if (!w.is_involution()) {
    throw std::invalid_argument("circ_act: not an involution: "
                                + w.to_string());
  }
  auto const                    A = w.domain();
  Combination<PartialInjection> out;
  for (auto const& [u, coeff] : hecke_act(i, psi_embed(A, w), rule)) {
    std::vector<int> im(w.size(), 0);
    for (std::size_t x = 1; x <= w.size(); ++x) {
      int xi = static_cast<int>(x);
      if (w.in_domain(xi)) {
        im[x - 1] = u(xi);
      } else if (u(xi) != xi) {
        throw std::logic_error("circ_act: Hecke action left psi_A(G(A))");
      }
    }
    out.emplace_back(PartialInjection(std::move(im)), coeff);
  }
  return out;
}

Combination<PartialInjection> qrook_T_act(std::size_t             i,
                                          PartialInjection const& w,
                                          HeckeRule               rule) {
  std::size_t const n = w.size();
  if (i < 1 || i >= n) {
    throw std::invalid_argument("qrook_T_act: index " + std::to_string(i)
                                + " out of range for n = "
                                + std::to_string(n));
  }
  if (!w.is_involution()) {
    throw std::invalid_argument("qrook_T_act: not an involution: "
                                + w.to_string());
  }
  int const  a   = static_cast<int>(i);
  bool const in  = w.in_domain(a);
  bool const in1 = w.in_domain(a + 1);
  QPoly const q  = QPoly::q();
  if (in && in1) {
    return circ_act(i, w, rule);
  }
  if (!in && !in1) {
    return {{w, q}};
  }
  auto conj = w.conjugated_by(Permutation::simple(n, a));
  if (in) {
    return {{conj, QPoly(1)}};
  }
  return {{conj, q}, {w, q - QPoly(1)}};
}

std::optional<PartialInjection> qrook_P_act(std::size_t             i,
                                            PartialInjection const& w) {
  if (i < 1 || i > w.size()) {
    throw std::invalid_argument("qrook_P_act: index out of range");
  }
  for (int x : w.domain()) {
    if (x <= static_cast<int>(i)) {
      return std::nullopt;
    }
  }
  return w;
}

QRookModelRep::QRookModelRep(std::size_t n, HeckeRule rule) : _n(n) {
  if (n < 1) {
    throw std::invalid_argument("q-rook model needs n >= 1");
  }
  _basis = enumerate_involutions_isn(n);
  std::stable_sort(_basis.begin(), _basis.end(),
                   [](auto const& x, auto const& y) {
                     return x.rank() > y.rank();
                   });
  for (std::size_t k = 0; k < _basis.size(); ++k) {
    _index.emplace(_basis[k], k);
  }
  std::size_t const d = _basis.size();
  for (std::size_t i = 1; i < n; ++i) {
    QPolyMatrix m(d, d);
    for (std::size_t c = 0; c < d; ++c) {
      for (auto const& [u, coeff] : qrook_T_act(i, _basis[c], rule)) {
        m(index_of(u), c) += coeff;
      }
    }
    _T.push_back(std::move(m));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    QPolyMatrix m(d, d);
    for (std::size_t c = 0; c < d; ++c) {
      if (auto u = qrook_P_act(i, _basis[c])) {
        m(index_of(*u), c) = QPoly(1);
      }
    }
    _P.push_back(std::move(m));
  }
}

std::size_t QRookModelRep::index_of(PartialInjection const& w) const {
  auto it = _index.find(w);
  if (it == _index.end()) {
    throw std::invalid_argument("not a basis involution: " + w.to_string());
  }
  return it->second;
}

std::size_t QRookModelRep::grade(std::size_t basis_index) const {
  return _n - _basis.at(basis_index).rank();
}

GeneratorSet QRookModelRep::generator_set() const {
  GeneratorSet g;
  for (std::size_t i = 1; i < _n; ++i) {
    g.names.push_back("T" + std::to_string(i));
    g.matrices.push_back(T(i));
  }
  for (std::size_t i = 1; i <= _n; ++i) {
    g.names.push_back("P" + std::to_string(i));
    g.matrices.push_back(P(i));
  }
  return g;
}

std::vector<std::size_t> QRookModelRep::sector(std::size_t k) const {
  std::vector<std::size_t> idx;
  for (std::size_t c = 0; c < _basis.size(); ++c) {
    if (grade(c) == k) {
      idx.push_back(c);
    }
  }
  return idx;
}

std::vector<std::size_t> QRookModelRep::standard_sector(std::size_t k) const {
  std::vector<int> prefix;
  for (std::size_t x = 1; x + k <= _n; ++x) {
    prefix.push_back(static_cast<int>(x));
  }
  std::vector<std::size_t> idx;
  for (std::size_t c = 0; c < _basis.size(); ++c) {
    if (_basis[c].domain() == prefix) {
      idx.push_back(c);
    }
  }
  return idx;
}

QRookModelRep qrook_matrices(std::size_t n, HeckeRule rule) {
  return QRookModelRep(n, rule);
}

Combination<PartialInjection> conjugate_combination(
    Permutation const& pi, Combination<PartialInjection> const& v) {
  Combination<PartialInjection> out;
  for (auto const& [u, c] : v) {
    out.emplace_back(u.conjugated_by(pi), c);
  }
  return out;
}

bool same_vector(Combination<PartialInjection> const& a,
                 Combination<PartialInjection> const& b) {
  std::map<PartialInjection, QPoly> va, vb;
  for (auto const& [u, c] : a) {
    va[u] += c;
  }
  for (auto const& [u, c] : b) {
    vb[u] += c;
  }
  std::erase_if(va, [](auto const& kv) { return kv.second.is_zero(); });
  std::erase_if(vb, [](auto const& kv) { return kv.second.is_zero(); });
  return va == vb;
}

EquivarianceReport conj_equivariance_check(std::size_t n, HeckeRule rule) {
  EquivarianceReport report;
  auto const         basis = enumerate_involutions_isn(n);
  auto const         perms = all_permutations(n);
  for (std::size_t i = 1; i < n; ++i) {
    int const a = static_cast<int>(i);
    for (auto const& w : basis) {
      if (!w.in_domain(a) || !w.in_domain(a + 1)) {
        continue;
      }
      auto const lhs_base = circ_act(i, w, rule);
      if (i + 2 <= n) {
        for (auto const& pi : perms) {
          if (pi(a) != a + 1 || pi(a + 1) != a + 2) {
            continue;
          }
          ++report.part_a_instances;
          auto lhs = conjugate_combination(pi, lhs_base);
          auto rhs = circ_act(i + 1, w.conjugated_by(pi), rule);
          if (!same_vector(lhs, rhs)) {
            report.failures.push_back("(a) i=" + std::to_string(i) + " pi="
                                      + pi.to_string() + " w="
                                      + w.to_string());
          }
        }
      }
      for (std::size_t j = 1; j < n; ++j) {
        if (j + 1 >= i && j <= i + 1) {
          continue;  // need |i - j| > 1
        }
        ++report.part_b_instances;
        auto sj  = Permutation::simple(n, static_cast<int>(j));
        auto lhs = conjugate_combination(sj, lhs_base);
        auto rhs = circ_act(i, w.conjugated_by(sj), rule);
        if (!same_vector(lhs, rhs)) {
          report.failures.push_back("(b) i=" + std::to_string(i) + " j="
                                    + std::to_string(j) + " w="
                                    + w.to_string());
        }
      }
    }
  }
  return report;
}

int braid_case(std::size_t i, PartialInjection const& w) {
  int const  a  = static_cast<int>(i);
  bool const x0 = w.in_domain(a);
  bool const x1 = w.in_domain(a + 1);
  bool const x2 = w.in_domain(a + 2);
  if (x0 && x1 && x2) return 1;
  if (x0 && x1) return 2;
  if (x0 && x2) return 3;
  if (x1 && x2) return 4;
  if (x2) return 5;
  if (x1) return 6;
  if (x0) return 7;
  return 8;
}

int commuting_case(std::size_t i, std::size_t j, PartialInjection const& w) {
  // 0: neither in dom, 1: both, 2: only the lower point, 3: only the upper.
  auto kind = [&w](std::size_t k) {
    bool lo = w.in_domain(static_cast<int>(k));
    bool hi = w.in_domain(static_cast<int>(k) + 1);
    return lo && hi ? 1 : (lo ? 2 : (hi ? 3 : 0));
  };
  int ki = kind(i), kj = kind(j);
  if (ki == 0 || kj == 0) {
    return 0;
  }
  if (ki > kj) {
    std::swap(ki, kj);
  }
  if (ki == 1) {
    return kj == 1 ? 1 : (kj == 2 ? 2 : 3);
  }
  if (ki == 2) {
    return kj == 2 ? 4 : 5;
  }
  return 6;
}

namespace {

bool columns_agree(QPolyMatrix const& a, QPolyMatrix const& b, std::size_t c) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (!(a(r, c) == b(r, c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

CaseCoverage proof_case_coverage(QRookModelRep const& rep) {
  CaseCoverage      cov;
  std::size_t const n = rep.n();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    auto lhs = rep.T(i) * rep.T(i + 1) * rep.T(i);
    auto rhs = rep.T(i + 1) * rep.T(i) * rep.T(i + 1);
    for (std::size_t c = 0; c < rep.dimension(); ++c) {
      int k = braid_case(i, rep.basis()[c]);
      ++cov.braid_hits[k];
      if (!columns_agree(lhs, rhs, c)) {
        cov.failures.push_back("braid case " + std::to_string(k) + " i="
                               + std::to_string(i) + " w="
                               + rep.basis()[c].to_string());
      }
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      auto lhs = rep.T(i) * rep.T(j);
      auto rhs = rep.T(j) * rep.T(i);
      for (std::size_t c = 0; c < rep.dimension(); ++c) {
        int k = commuting_case(i, j, rep.basis()[c]);
        ++cov.commuting_hits[k];
        if (!columns_agree(lhs, rhs, c)) {
          cov.failures.push_back("commuting case " + std::to_string(k)
                                 + " i=" + std::to_string(i) + " j="
                                 + std::to_string(j) + " w="
                                 + rep.basis()[c].to_string());
        }
      }
    }
  }
  return cov;
}

}  // namespace gelfand
