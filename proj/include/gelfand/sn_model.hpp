#ifndef GELFAND_SN_MODEL_HPP_
#define GELFAND_SN_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "gelfand/matrix.hpp"
#include "gelfand/partitions.hpp"
#include "gelfand/permutation.hpp"

namespace gelfand {

// A basis involution with a sign: the image of one basis vector under a
// signed-permutation action.
template <typename Element>
struct SignedBasisVector {
  int     sign;
  Element element;

  friend bool operator==(SignedBasisVector const&,
                         SignedBasisVector const&) = default;
};

// pi . I_w = (-1)^{inv_w(pi)} I_{pi w pi^{-1}}. Throws std::invalid_argument if
// w is not an involution.
SignedBasisVector<Permutation> sn_act(Permutation const& pi,
                                      Permutation const& w);

// The involution model of S_n (or of a Young subgroup S_{n1} x ... x S_{nl}
// acting on the block-preserving involutions). Matrices act on column
// vectors in the basis order.
class SnModelRep {
 public:
  // Young subgroup on consecutive blocks; block sizes must be positive.
  explicit SnModelRep(std::vector<std::size_t> block_sizes);

  std::size_t                     n() const { return _n; }
  std::vector<std::size_t> const& block_sizes() const { return _blocks; }
  std::vector<Permutation> const& basis() const { return _basis; }
  std::size_t                     dimension() const { return _basis.size(); }
  std::size_t index_of(Permutation const& w) const;

  // Simple transpositions s_i lying in the Young subgroup, and their
  // matrices.
  std::vector<Permutation> const& generators() const { return _generators; }
  std::vector<IntMatrix> const&   generator_matrices() const {
    return _gen_matrices;
  }

  bool preserves_blocks(Permutation const& pi) const;
  // Throws std::invalid_argument unless pi preserves the blocks.
  IntMatrix matrix(Permutation const& pi) const;

  // 2-cycle count of each basis element.
  std::vector<std::size_t> grading() const;

 private:
  std::size_t                        _n;
  std::vector<std::size_t>           _blocks;
  std::vector<Permutation>           _basis;
  std::map<Permutation, std::size_t> _index;
  std::vector<Permutation>           _generators;
  std::vector<IntMatrix>             _gen_matrices;
};

// Matrix of pi on V_n in the canonical involution basis.
IntMatrix sn_matrix(Permutation const& pi);

SnModelRep sn_young_model(std::vector<std::size_t> const& block_sizes);

// Trace of sn_matrix on one representative per cycle type.
std::map<IntegerPartition, std::int64_t> sn_character(std::size_t n);

// Same, restricted to the sector V_n^k spanned by involutions with k
// 2-cycles.
std::map<IntegerPartition, std::int64_t> sn_sector_character(std::size_t n,
                                                             std::size_t k);

}  // namespace gelfand

#endif  // GELFAND_SN_MODEL_HPP_
