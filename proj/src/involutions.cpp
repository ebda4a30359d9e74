#include "gelfand/involutions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace gelfand {

std::set<IndexPair> inversion_set(Permutation const& pi) {
  std::set<IndexPair> inv;
  int const           n = static_cast<int>(pi.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pi(i) > pi(j)) {
        inv.emplace(i, j);
      }
    }
  }
  return inv;
}

std::set<IndexPair> pair_set(Permutation const& w) {
  if (!w.is_involution()) {
    throw std::invalid_argument("pair_set: not an involution: "
                                + w.to_string());
  }
  std::set<IndexPair> pairs;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    if (w(i) > i) {
      pairs.emplace(i, w(i));
    }
  }
  return pairs;
}

std::size_t inv_w(Permutation const& w, Permutation const& pi) {
  if (w.size() != pi.size()) {
    throw std::invalid_argument("inv_w: degree mismatch");
  }
  std::size_t count = 0;
  for (auto const& [i, j] : pair_set(w)) {
    if (pi(i) > pi(j)) {
      ++count;
    }
  }
  return count;
}

std::size_t two_cycle_count(Permutation const& w) {
  return pair_set(w).size();
}

std::vector<Permutation> enumerate_involutions_sn(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<int>         im(n, 0);
  // Choose w(x) for the least unassigned x: fix it or pair it with a larger
  // unassigned point.
  std::function<void()> rec = [&]() {
    auto it = std::find(im.begin(), im.end(), 0);
    if (it == im.end()) {
      out.emplace_back(im);
      return;
    }
    int x  = static_cast<int>(it - im.begin()) + 1;
    *it    = x;
    rec();
    *it = 0;
    for (int y = x + 1; y <= static_cast<int>(n); ++y) {
      if (im[y - 1] == 0) {
        im[x - 1] = y;
        im[y - 1] = x;
        rec();
        im[x - 1] = 0;
        im[y - 1] = 0;
      }
    }
  };
  rec();
  std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    auto ka = two_cycle_count(a);
    auto kb = two_cycle_count(b);
    return std::tie(ka, a) < std::tie(kb, b);
  });
  return out;
}

std::vector<PartialInjection> enumerate_involutions_isn(std::size_t n) {
  std::vector<PartialInjection> out;
  for (std::size_t r = 0; r <= n; ++r) {
    // Domains of size r in lexicographic order.
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + r, true);
    std::vector<std::vector<int>> domains;
    do {
      std::vector<int> dom;
      for (std::size_t x = 0; x < n; ++x) {
        if (choose[x]) {
          dom.push_back(static_cast<int>(x) + 1);
        }
      }
      domains.push_back(std::move(dom));
    } while (std::prev_permutation(choose.begin(), choose.end()));
    std::sort(domains.begin(), domains.end());
    for (auto const& dom : domains) {
      // Involutions of S_r transported onto dom, already in canonical order.
      for (auto const& w : enumerate_involutions_sn(r)) {
        std::vector<int> im(n, 0);
        for (std::size_t k = 0; k < r; ++k) {
          im[dom[k] - 1] = dom[w(static_cast<int>(k) + 1) - 1];
        }
        out.emplace_back(std::move(im));
      }
    }
  }
  return out;
}

std::uint64_t involution_count(std::size_t n) {
  std::uint64_t prev = 1, cur = 1;  // t_0, t_1
  if (n == 0) {
    return 1;
  }
  for (std::size_t m = 2; m <= n; ++m) {
    std::uint64_t next = cur + (m - 1) * prev;
    prev               = cur;
    cur                = next;
  }
  return cur;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace gelfand
