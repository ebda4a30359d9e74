#ifndef GELFAND_BLOCK_BIJECTION_HPP_
#define GELFAND_BLOCK_BIJECTION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gelfand {

// A block of a set partition of {1..n}, as a bitmask (bit x-1 for point x).
using Block = std::uint32_t;
// Blocks sorted by least element.
using SetPartition = std::vector<Block>;

// All set partitions of {1..n}, each as blocks sorted by least element.
std::vector<SetPartition> enumerate_set_partitions(std::size_t n);

std::string block_string(Block b);

// A bijection between the blocks of two set partitions of {1..n} (an element
// of the dual symmetric inverse monoid). Stored canonically as (domain
// block, image block) pairs sorted by domain block.
class SetPartitionBijection {
 public:
  SetPartitionBijection() = default;
  // Throws std::invalid_argument unless the domain blocks and the image
  // blocks each partition {1..n}.
  SetPartitionBijection(std::size_t n, std::vector<std::pair<Block, Block>> map);

  static SetPartitionBijection identity_on(std::size_t         n,
                                           SetPartition const& p);

  std::size_t                                 size() const { return _n; }
  std::vector<std::pair<Block, Block>> const& blocks() const { return _map; }
  SetPartition                                domain_partition() const;
  SetPartition                                image_partition() const;
  // Every block maps to a block of the same size.
  bool is_uniform() const;
  bool is_idempotent() const;

  // Product in the dual symmetric inverse monoid, right factor first: blocks
  // are glued along the join of b's image partition and a's domain partition.
  friend SetPartitionBijection operator*(SetPartitionBijection const& a,
                                         SetPartitionBijection const& b);

  friend bool operator==(SetPartitionBijection const&,
                         SetPartitionBijection const&) = default;
  friend auto operator<=>(SetPartitionBijection const& a,
                          SetPartitionBijection const& b) {
    return a._map <=> b._map;
  }

  // e.g. "{1,2}->{2,3}|{3}->{1}"
  std::string to_string() const;

 private:
  std::size_t                          _n = 0;
  std::vector<std::pair<Block, Block>> _map;
};

std::ostream& operator<<(std::ostream& os, SetPartitionBijection const& x);

// All uniform block bijections of {1..n}, i.e. the monoid F*_n.
std::vector<SetPartitionBijection> enumerate_uniform_block_bijections(
    std::size_t n);

}  // namespace gelfand

#endif  // GELFAND_BLOCK_BIJECTION_HPP_
