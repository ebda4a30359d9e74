#ifndef GELFAND_HECKE_MODEL_HPP_
#define GELFAND_HECKE_MODEL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gelfand/matrix.hpp"
#include "gelfand/permutation.hpp"
#include "gelfand/relations.hpp"
#include "gelfand/scalars.hpp"

namespace gelfand {

template <typename Element>
using Combination = std::vector<std::pair<Element, QPoly>>;

// How T_i acts on I_w when both i and i+1 are moved by w.
//
// literal: always -I_w. This satisfies the Hecke relations but for n >= 4 is
//   not a Gelfand model and does not specialize to the S_n model at q = 1.
// gelfand: -I_w when w swaps i and i+1; otherwise {w, s_i w s_i} forms the
//   same 2x2 block as the one-moved cases, with the descent w(i) > w(i+1)
//   mapping plainly to I_{s_i w s_i}.
enum class HeckeRule { gelfand, literal };

// T_i . I_w for an involution w of S_n:
//   i, i+1 fixed               -> q I_w
//   w(i) = i+1                 -> -I_w
//   i moved, i+1 fixed         -> I_{s_i w s_i}
//   i fixed, i+1 moved         -> q I_{s_i w s_i} + (q-1) I_w
// plus the both-moved case described by HeckeRule. Throws
// std::invalid_argument if i is out of range or w is not an involution.
Combination<Permutation> hecke_act(std::size_t        i,
                                   Permutation const& w,
                                   HeckeRule          rule = HeckeRule::gelfand);

// Generator matrices T_1..T_{n-1} of V_{n,q} in the canonical involution
// basis.
class HeckeModelRep {
 public:
  explicit HeckeModelRep(std::size_t n, HeckeRule rule = HeckeRule::gelfand);

  std::size_t                     n() const { return _n; }
  HeckeRule                       rule() const { return _rule; }
  std::vector<Permutation> const& basis() const { return _basis; }
  std::size_t                     dimension() const { return _basis.size(); }
  std::size_t                     index_of(Permutation const& w) const;
  // T_i for i = 1..n-1.
  QPolyMatrix const& T(std::size_t i) const { return _T.at(i - 1); }
  std::vector<QPolyMatrix> const& generators() const { return _T; }
  GeneratorSet                    generator_set() const;

 private:
  std::size_t                        _n;
  HeckeRule                          _rule;
  std::vector<Permutation>           _basis;
  std::map<Permutation, std::size_t> _index;
  std::vector<QPolyMatrix>           _T;
};

HeckeModelRep hecke_matrices(std::size_t n,
                             HeckeRule   rule = HeckeRule::gelfand);

// Checks that T_i decomposes over the orbits {w, s_i w s_i} into blocks (q),
// (-1) and [[0, q], [1, q-1]]. Returns the first offending basis index.
std::optional<std::size_t> find_block_type_violation(HeckeModelRep const& rep,
                                                     std::size_t          i);

}  // namespace gelfand

#endif  // GELFAND_HECKE_MODEL_HPP_
