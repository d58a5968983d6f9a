#pragma once

#include <vector>

#include "unmix/rat.hpp"

namespace unmix {

/// Point of a fixed ambient dimension with exact rational coordinates.
/// Ordered lexicographically so point sets have a canonical order.
using RatPoint = std::vector<Rat>;

struct RatMatrix {
  std::vector<RatPoint> rows;

  RatMatrix() = default;
  explicit RatMatrix(std::vector<RatPoint> r);

  size_t row_count() const { return rows.size(); }
  size_t col_count() const { return rows.empty() ? 0 : rows[0].size(); }
};

bool lex_less(const RatPoint& a, const RatPoint& b);

Rat dot(const RatPoint& a, const RatPoint& b);
RatPoint add(const RatPoint& a, const RatPoint& b);
RatPoint sub(const RatPoint& a, const RatPoint& b);
bool is_zero(const RatPoint& p);
RatPoint int_point(const std::vector<long>& c);

std::string point_str(const RatPoint& p);

/// Exact determinant by fraction-free (Bareiss) elimination. Row
/// denominators are cleared first so the elimination itself runs in
/// integers; the result is rescaled back exactly.
Rat det(const RatMatrix& m);

/// Exact rank over the rationals.
int rank(const RatMatrix& m);

/// Dimension of the affine hull of a nonempty point set.
int affine_dim(const std::vector<RatPoint>& pts);

/// Integer matrix utilities used by the exact geometry kernels.
Int int_det(std::vector<std::vector<Int>> m);
int int_rank(std::vector<std::vector<Int>> m);

/// A nonzero primitive integer vector in the kernel of m (rows are
/// treated as linear functionals). Requires rank(m) < columns.
std::vector<Int> int_kernel_vector(const std::vector<std::vector<Int>>& m);

/// Pivot columns of the difference matrix {p - pts[0]}: a coordinate
/// subset on which the affine hull of pts projects isomorphically.
std::vector<int> affine_pivot_columns(const std::vector<RatPoint>& pts);

void make_primitive(std::vector<Int>& v);

}  // namespace unmix
