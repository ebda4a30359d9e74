#include "gelfand/tableaux.hpp"

#include <algorithm>

namespace gelfand {

RSPair rs_insert(Permutation const& pi) {
  RSPair out;
  for (int step = 1; step <= static_cast<int>(pi.size()); ++step) {
    int         x   = pi(step);
    std::size_t row = 0;
    while (true) {
      if (row == out.insertion.size()) {
        out.insertion.push_back({x});
        out.recording.push_back({step});
        break;
      }
      auto& r  = out.insertion[row];
      auto  it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        out.recording[row].push_back(step);
        break;
      }
      std::swap(x, *it);  // bump into the next row
      ++row;
    }
  }
  return out;
}

IntegerPartition shape(Tableau const& t) {
  std::vector<int> parts;
  for (auto const& row : t) {
    parts.push_back(static_cast<int>(row.size()));
  }
  return IntegerPartition(std::move(parts));
}

bool is_standard(Tableau const& t) {
  std::vector<int> all;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].empty() || (i > 0 && t[i].size() > t[i - 1].size())) {
      return false;
    }
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (j > 0 && t[i][j] <= t[i][j - 1]) {
        return false;
      }
      if (i > 0 && t[i][j] <= t[i - 1][j]) {
        return false;
      }
      all.push_back(t[i][j]);
    }
  }
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k] != static_cast<int>(k) + 1) {
      return false;
    }
  }
  return true;
}

}  // namespace gelfand
