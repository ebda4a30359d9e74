#include "gelfand/sn_model.hpp"

#include <numeric>
#include <stdexcept>

#include "gelfand/involutions.hpp"

namespace gelfand {

SignedBasisVector<Permutation> sn_act(Permutation const& pi,
                                      Permutation const& w) {
  std::size_t inv = inv_w(w, pi);
  return {inv % 2 == 0 ? 1 : -1, pi.conjugate(w)};
}

SnModelRep::SnModelRep(std::vector<std::size_t> block_sizes)
    : _n(std::accumulate(block_sizes.begin(), block_sizes.end(),
                         std::size_t{0})),
      _blocks(std::move(block_sizes)) {
  for (auto b : _blocks) {
    if (b == 0) {
      throw std::invalid_argument("sn_young_model: block sizes must be "
                                  "positive");
    }
  }
  for (auto const& w : enumerate_involutions_sn(_n)) {
    if (preserves_blocks(w)) {
      _index.emplace(w, _basis.size());
      _basis.push_back(w);
    }
  }
  std::size_t start = 1;
  for (auto b : _blocks) {
    for (std::size_t i = start; i + 1 < start + b; ++i) {
      _generators.push_back(Permutation::simple(_n, static_cast<int>(i)));
    }
    start += b;
  }
  for (auto const& g : _generators) {
    _gen_matrices.push_back(matrix(g));
  }
}

std::size_t SnModelRep::index_of(Permutation const& w) const {
  auto it = _index.find(w);
  if (it == _index.end()) {
    throw std::invalid_argument("not a basis involution: " + w.to_string());
  }
  return it->second;
}

bool SnModelRep::preserves_blocks(Permutation const& pi) const {
  if (pi.size() != _n) {
    return false;
  }
  std::size_t start = 1;
  for (auto b : _blocks) {
    for (std::size_t x = start; x < start + b; ++x) {
      auto y = static_cast<std::size_t>(pi(static_cast<int>(x)));
      if (y < start || y >= start + b) {
        return false;
      }
    }
    start += b;
  }
  return true;
}

IntMatrix SnModelRep::matrix(Permutation const& pi) const {
  if (!preserves_blocks(pi)) {
    throw std::invalid_argument("permutation " + pi.to_string()
                                + " is not in the Young subgroup");
  }
  IntMatrix m(dimension(), dimension());
  for (std::size_t c = 0; c < _basis.size(); ++c) {
    auto [sign, image]      = sn_act(pi, _basis[c]);
    m(index_of(image), c) = sign;
  }
  return m;
}

std::vector<std::size_t> SnModelRep::grading() const {
  std::vector<std::size_t> k;
  for (auto const& w : _basis) {
    k.push_back(two_cycle_count(w));
  }
  return k;
}

IntMatrix sn_matrix(Permutation const& pi) {
  return SnModelRep({pi.size()}).matrix(pi);
}

SnModelRep sn_young_model(std::vector<std::size_t> const& block_sizes) {
  return SnModelRep(block_sizes);
}

std::map<IntegerPartition, std::int64_t> sn_character(std::size_t n) {
  SnModelRep                               model({n});
  std::map<IntegerPartition, std::int64_t> chi;
  for (auto const& mu : integer_partitions(n)) {
    chi[mu] = model.matrix(class_representative(mu)).trace();
  }
  return chi;
}

std::map<IntegerPartition, std::int64_t> sn_sector_character(std::size_t n,
                                                             std::size_t k) {
  SnModelRep               model({n});
  auto                     grade = model.grading();
  std::vector<std::size_t> sector;
  for (std::size_t i = 0; i < grade.size(); ++i) {
    if (grade[i] == k) {
      sector.push_back(i);
    }
  }
  std::map<IntegerPartition, std::int64_t> chi;
  for (auto const& mu : integer_partitions(n)) {
    chi[mu] = model.matrix(class_representative(mu)).submatrix(sector).trace();
  }
  return chi;
}

}  // namespace gelfand
