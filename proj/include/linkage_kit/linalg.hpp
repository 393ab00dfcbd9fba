#pragma once

#include <cstddef>
#include <vector>

#include "linkage_kit/rational.hpp"

namespace linkage_kit {

using RationalMatrix = std::vector<RationalVector>;

// Reduced row echelon form of a row-spanning set. Zero rows are dropped, so
// rows.size() is the rank of the input and pivots[k] is the pivot column of
// rows[k] (strictly increasing).
struct RowEchelon {
  std::size_t columns = 0;
  RationalMatrix rows;
  std::vector<std::size_t> pivots;
};

RowEchelon row_echelon(RationalMatrix rows, std::size_t columns);

// Subtracts the echelon rows so that every pivot coordinate of the result is
// zero. The result depends only on the coset v + span(rows).
RationalVector reduce_modulo(const RowEchelon& span, RationalVector v);

bool in_span(const RowEchelon& span, const RationalVector& v);

Rational determinant(RationalMatrix m);

// Solves m * x = rhs for square invertible m.
RationalVector solve(RationalMatrix m, RationalVector rhs);

}  // namespace linkage_kit
