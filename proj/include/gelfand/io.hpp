#ifndef GELFAND_IO_HPP_
#define GELFAND_IO_HPP_

#include <cstdint>
#include <string>

#include "json.hpp"

#include "gelfand/block_bijection.hpp"
#include "gelfand/matrix.hpp"
#include "gelfand/permutation.hpp"
#include "gelfand/scalars.hpp"
#include "gelfand/tableaux.hpp"

namespace gelfand {

using Json = nlohmann::ordered_json;

// "p/q", or "p" for integers.
Json to_json(Rational const& r);
// Coefficient strings, constant term first: q^2 - 1 -> ["-1","0","1"].
Json to_json(QPoly const& p);
Json to_json(std::int64_t x);
// One-line notation; 0 marks an undefined image.
Json to_json(Permutation const& p);
Json to_json(PartialInjection const& p);
// [[domain block, image block], ...] with blocks as sorted point lists.
Json to_json(SetPartitionBijection const& x);
// Rows, top first.
Json to_json(Tableau const& t);

template <typename T>
Json to_json(Matrix<T> const& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Inverses of the scalar encodings; throw std::invalid_argument.
Rational rational_from_json(Json const& j);
QPoly    qpoly_from_json(Json const& j);

// Flat text for CSV cells: "3/4", or "[-1,0,1]" for a QPoly.
std::string csv_cell(Rational const& r);
std::string csv_cell(QPoly const& p);
std::string csv_cell(std::int64_t x);

}  // namespace gelfand

#endif  // GELFAND_IO_HPP_
