#include "linkage_kit/linalg.hpp"

#include <cassert>
#include <utility>

#include "linkage_kit/error.hpp"

namespace linkage_kit {

namespace {

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

RowEchelon row_echelon(RationalMatrix rows, std::size_t columns) {
  RowEchelon out;
  out.columns = columns;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < columns && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    const Rational scale = rows[lead][col];
    for (auto& x : rows[lead]) x /= scale;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      const Rational f = rows[r][col];
      for (std::size_t c = 0; c < columns; ++c) rows[r][c] -= f * rows[lead][c];
    }
    out.pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  assert(std::none_of(rows.begin(), rows.end(), is_zero));
  out.rows = std::move(rows);
  return out;
}

RationalVector reduce_modulo(const RowEchelon& span, RationalVector v) {
  if (v.size() != span.columns)
    throw Error(ErrorKind::ContextMismatch, "vector length does not match span dimension");
  for (std::size_t k = 0; k < span.rows.size(); ++k) {
    const Rational f = v[span.pivots[k]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < span.columns; ++c) v[c] -= f * span.rows[k][c];
  }
  return v;
}

bool in_span(const RowEchelon& span, const RationalVector& v) {
  return is_zero(reduce_modulo(span, v));
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

RationalVector solve(RationalMatrix m, RationalVector rhs) {
  const std::size_t n = m.size();
  for (std::size_t r = 0; r < n; ++r) m[r].push_back(rhs[r]);
  const RowEchelon e = row_echelon(std::move(m), n + 1);
  if (e.rows.size() != n || e.pivots.back() != n - 1)
    throw Error(ErrorKind::InvalidCartan, "singular linear system");
  RationalVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = e.rows[r][n];
  return x;
}

}  // namespace linkage_kit
