#ifndef GELFAND_LINALG_HPP_
#define GELFAND_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gelfand/matrix.hpp"
#include "gelfand/scalars.hpp"

namespace gelfand {

struct RrefResult {
  std::size_t              rank;
  RatMatrix                reduced;
  std::vector<std::size_t> pivot_columns;
};

// Exact reduced row-echelon form by Gauss-Jordan elimination over Q.
RrefResult rref(RatMatrix const& m);

std::size_t rank(RatMatrix const& m);

// Incremental row echelon form over Q for sparse rows. Rows are added one at
// a time and reduced against the pivots found so far; only the rank is
// tracked, so rows are never back-substituted.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;  // sorted by col

  explicit SparseEchelon(std::size_t cols) : _cols(cols) {}

  // Returns true when the row was independent of the rows seen so far.
  bool add_row(Row row);

  std::size_t rank() const { return _pivots.size(); }
  std::size_t cols() const { return _cols; }

 private:
  std::size_t                _cols;
  std::map<std::size_t, Row> _pivots;  // leading column -> row, lead 1
};

// Dimension of {X : XM = MX for every M in mats}, from the rank of the
// stacked linear system in the d^2 entries of X.
std::size_t commutant_dim(std::vector<RatMatrix> const& mats);

}  // namespace gelfand

#endif  // GELFAND_LINALG_HPP_
