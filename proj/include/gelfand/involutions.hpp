#ifndef GELFAND_INVOLUTIONS_HPP_
#define GELFAND_INVOLUTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "gelfand/permutation.hpp"

namespace gelfand {

using IndexPair = std::pair<int, int>;

// Inv(pi): pairs i < j with pi(i) > pi(j).
std::set<IndexPair> inversion_set(Permutation const& pi);

// Pair(w): the 2-cycles (i, w(i)) with i < w(i). Throws std::invalid_argument
// when w is not an involution.
std::set<IndexPair> pair_set(Permutation const& w);

// |Inv(pi) ∩ Pair(w)|. Throws like pair_set.
std::size_t inv_w(Permutation const& w, Permutation const& pi);

// Number of 2-cycles of an involution.
std::size_t two_cycle_count(Permutation const& w);

// All involutions of S_n ordered by (2-cycle count, one-line notation).
std::vector<Permutation> enumerate_involutions_sn(std::size_t n);

// All involutions of IS_n ordered by (|dom|, dom, 2-cycle count, array form).
std::vector<PartialInjection> enumerate_involutions_isn(std::size_t n);

// t_n, the number of involutions of S_n (t_n = t_{n-1} + (n-1) t_{n-2}).
std::uint64_t involution_count(std::size_t n);

std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace gelfand

#endif  // GELFAND_INVOLUTIONS_HPP_
