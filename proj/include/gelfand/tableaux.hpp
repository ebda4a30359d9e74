#ifndef GELFAND_TABLEAUX_HPP_
#define GELFAND_TABLEAUX_HPP_

#include <vector>

#include "gelfand/partitions.hpp"
#include "gelfand/permutation.hpp"

namespace gelfand {

// Rows of a Young tableau, top row first.
using Tableau = std::vector<std::vector<int>>;

struct RSPair {
  Tableau insertion;  // a(pi)
  Tableau recording;  // b(pi)
};

// Robinson-Schensted row insertion of pi(1), pi(2), ..., pi(n).
RSPair rs_insert(Permutation const& pi);

IntegerPartition shape(Tableau const& t);

// Rows and columns strictly increasing, entries exactly 1..size.
bool is_standard(Tableau const& t);

}  // namespace gelfand

#endif  // GELFAND_TABLEAUX_HPP_
