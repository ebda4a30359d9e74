#ifndef GELFAND_QROOK_MODEL_HPP_
#define GELFAND_QROOK_MODEL_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/hecke_model.hpp"
#include "gelfand/matrix.hpp"
#include "gelfand/permutation.hpp"
#include "gelfand/relations.hpp"

namespace gelfand {

// psi_A: the permutation of {1..n} acting as w on A and fixing the rest.
// Throws std::invalid_argument unless dom(w) = im(w) = A.
Permutation psi_embed(std::vector<int> const& A, PartialInjection const& w);

// T_i o I_w: the Hecke action pulled back along psi_{dom w}. Requires
// i, i+1 in dom(w) and w an involution, else std::invalid_argument.
Combination<PartialInjection> circ_act(std::size_t             i,
                                       PartialInjection const& w,
                                       HeckeRule rule = HeckeRule::gelfand);

// T_i . I_w on the rook-monoid involution basis:
//   i, i+1 in dom        -> T_i o I_w
//   i, i+1 not in dom    -> q I_w
//   i in dom, i+1 not    -> I_{s_i w s_i}
//   i+1 in dom, i not    -> q I_{s_i w s_i} + (q-1) I_w
// where s_i w s_i is conjugation as a partial map.
Combination<PartialInjection> qrook_T_act(std::size_t             i,
                                          PartialInjection const& w,
                                          HeckeRule rule = HeckeRule::gelfand);

// P_i . I_w = I_w if dom(w) ⊆ {i+1..n}, else 0.
std::optional<PartialInjection> qrook_P_act(std::size_t             i,
                                            PartialInjection const& w);

// Generator matrices of V = V_q^{IS_n}. Basis: IS_n-involutions graded by
// |dom| descending, canonical order within a grade.
class QRookModelRep {
 public:
  explicit QRookModelRep(std::size_t n, HeckeRule rule = HeckeRule::gelfand);

  std::size_t                          n() const { return _n; }
  std::vector<PartialInjection> const& basis() const { return _basis; }
  std::size_t dimension() const { return _basis.size(); }
  std::size_t index_of(PartialInjection const& w) const;
  // k = n - |dom(w)|
  std::size_t grade(std::size_t basis_index) const;

  QPolyMatrix const& T(std::size_t i) const { return _T.at(i - 1); }
  QPolyMatrix const& P(std::size_t i) const { return _P.at(i - 1); }
  // T1..T{n-1}, P1..Pn
  GeneratorSet generator_set() const;

  // Basis indices spanning V^(k) and ~V^(k) (dom = {1..n-k}).
  std::vector<std::size_t> sector(std::size_t k) const;
  std::vector<std::size_t> standard_sector(std::size_t k) const;

 private:
  std::size_t                             _n;
  std::vector<PartialInjection>           _basis;
  std::map<PartialInjection, std::size_t> _index;
  std::vector<QPolyMatrix>                _T;
  std::vector<QPolyMatrix>                _P;
};

QRookModelRep qrook_matrices(std::size_t n,
                             HeckeRule   rule = HeckeRule::gelfand);

// pi (sum c_u I_u) pi^{-1} = sum c_u I_{pi u pi^{-1}}
Combination<PartialInjection> conjugate_combination(
    Permutation const& pi, Combination<PartialInjection> const& v);

// Two combinations are equal as vectors (order and zero terms ignored).
bool same_vector(Combination<PartialInjection> const& a,
                 Combination<PartialInjection> const& b);

struct EquivarianceReport {
  std::size_t              part_a_instances = 0;
  std::size_t              part_b_instances = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Exhaustively checks, for the circ action at degree n:
//  (a) pi (T_i o I_w) pi^{-1} = T_{i+1} o I_{pi w pi^{-1}} whenever
//      pi(i) = i+1 and pi(i+1) = i+2;
//  (b) s_j (T_i o I_w) s_j = T_i o I_{s_j w s_j} whenever |i - j| > 1.
EquivarianceReport conj_equivariance_check(std::size_t n,
                                           HeckeRule rule = HeckeRule::gelfand);

// Membership pattern of {i, i+1, i+2} in dom(w), numbered 1..8 as the cases
// of the braid-relation argument.
int braid_case(std::size_t i, PartialInjection const& w);

// Pattern of {i, i+1, j, j+1} in dom(w): 0 when T_i or T_j acts by q on
// everything involved, otherwise 1..6 up to swapping i and j.
int commuting_case(std::size_t i, std::size_t j, PartialInjection const& w);

struct CaseCoverage {
  std::array<std::size_t, 9> braid_hits{};     // index 1..8
  std::array<std::size_t, 7> commuting_hits{};  // index 0..6
  std::vector<std::string>   failures;         // column-level mismatches
};

// Evaluates both sides of every braid and commuting relation column by
// column and tallies the column's proof case.
CaseCoverage proof_case_coverage(QRookModelRep const& rep);

}  // namespace gelfand

#endif  // GELFAND_QROOK_MODEL_HPP_
