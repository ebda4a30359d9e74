#include "gelfand/block_bijection.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace gelfand {

namespace {

Block full_mask(std::size_t n) {
  return n == 0 ? 0 : static_cast<Block>((std::uint64_t{1} << n) - 1);
}

bool partitions_all(std::size_t n, std::vector<Block> const& blocks) {
  Block seen = 0;
  for (Block b : blocks) {
    if (b == 0 || (seen & b) != 0) {
      return false;
    }
    seen |= b;
  }
  return seen == full_mask(n);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x         = parent[x];
  }
  return x;
}

}  // namespace

std::string block_string(Block b) {
  std::string s  = "{";
  bool        first = true;
  for (int x = 0; x < 32; ++x) {
    if (b & (Block{1} << x)) {
      if (!first) {
        s += ",";
      }
      s += std::to_string(x + 1);
      first = false;
    }
  }
  return s + "}";
}

std::vector<SetPartition> enumerate_set_partitions(std::size_t n) {
  std::vector<SetPartition>         out;
  SetPartition                      cur;
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == n) {
      out.push_back(cur);
      return;
    }
    Block bit = Block{1} << x;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      cur[k] |= bit;
      rec(x + 1);
      cur[k] &= ~bit;
    }
    cur.push_back(bit);
    rec(x + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

SetPartitionBijection::SetPartitionBijection(
    std::size_t n, std::vector<std::pair<Block, Block>> map)
    : _n(n), _map(std::move(map)) {
  std::vector<Block> dom, im;
  for (auto const& [d, i] : _map) {
    dom.push_back(d);
    im.push_back(i);
  }
  if (!partitions_all(n, dom) || !partitions_all(n, im)) {
    throw std::invalid_argument("not a block bijection of {1.."
                                + std::to_string(n) + "}");
  }
  std::sort(_map.begin(), _map.end());
}

SetPartitionBijection SetPartitionBijection::identity_on(std::size_t n,
                                                         SetPartition const& p) {
  std::vector<std::pair<Block, Block>> map;
  for (Block b : p) {
    map.emplace_back(b, b);
  }
  return SetPartitionBijection(n, std::move(map));
}

SetPartition SetPartitionBijection::domain_partition() const {
  SetPartition p;
  for (auto const& [d, i] : _map) {
    p.push_back(d);
  }
  std::sort(p.begin(), p.end(), [](Block a, Block b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return p;
}

SetPartition SetPartitionBijection::image_partition() const {
  SetPartition p;
  for (auto const& [d, i] : _map) {
    p.push_back(i);
  }
  std::sort(p.begin(), p.end(), [](Block a, Block b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return p;
}

bool SetPartitionBijection::is_uniform() const {
  return std::all_of(_map.begin(), _map.end(), [](auto const& pr) {
    return std::popcount(pr.first) == std::popcount(pr.second);
  });
}

bool SetPartitionBijection::is_idempotent() const {
  return (*this) * (*this) == *this;
}

SetPartitionBijection operator*(SetPartitionBijection const& a,
                                SetPartitionBijection const& b) {
  if (a._n != b._n) {
    throw std::invalid_argument("block bijection product: degree mismatch");
  }
  std::size_t const        n = a._n;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto glue = [&](Block blk) {
    int first = std::countr_zero(blk);
    for (std::size_t x = 0; x < n; ++x) {
      if (blk & (Block{1} << x)) {
        parent[find_root(parent, x)] = find_root(parent, first);
      }
    }
  };
  for (auto const& [d, i] : b._map) {
    glue(i);
  }
  for (auto const& [d, i] : a._map) {
    glue(d);
  }
  // component root -> (preimage under b, image under a)
  std::vector<std::pair<Block, Block>> comp(n, {0, 0});
  for (auto const& [d, i] : b._map) {
    comp[find_root(parent, std::countr_zero(i))].first |= d;
  }
  for (auto const& [d, i] : a._map) {
    comp[find_root(parent, std::countr_zero(d))].second |= i;
  }
  std::vector<std::pair<Block, Block>> map;
  for (auto const& c : comp) {
    if (c.first != 0) {
      map.push_back(c);
    }
  }
  return SetPartitionBijection(n, std::move(map));
}

std::string SetPartitionBijection::to_string() const {
  std::string s;
  auto        dom = domain_partition();
  for (std::size_t k = 0; k < dom.size(); ++k) {
    auto it = std::find_if(_map.begin(), _map.end(), [&](auto const& pr) {
      return pr.first == dom[k];
    });
    if (k > 0) {
      s += "|";
    }
    s += block_string(it->first) + "->" + block_string(it->second);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, SetPartitionBijection const& x) {
  return os << x.to_string();
}

std::vector<SetPartitionBijection> enumerate_uniform_block_bijections(
    std::size_t n) {
  auto const                         parts = enumerate_set_partitions(n);
  std::vector<SetPartitionBijection> out;
  for (auto const& dom : parts) {
    for (auto const& im : parts) {
      if (dom.size() != im.size()) {
        continue;
      }
      std::vector<std::size_t> perm(im.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<std::pair<Block, Block>> map;
        bool                                 uniform = true;
        for (std::size_t k = 0; k < dom.size() && uniform; ++k) {
          uniform = std::popcount(dom[k]) == std::popcount(im[perm[k]]);
          map.emplace_back(dom[k], im[perm[k]]);
        }
        if (uniform) {
          out.emplace_back(n, std::move(map));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gelfand
