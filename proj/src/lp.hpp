#pragma once

// Exact LP feasibility, used for convex-hull membership of lattice points.

#include "matrix.hpp"

namespace kflag {

// Is {x >= 0 : A x = b} nonempty? Phase-1 simplex with Bland's rule over
// exact rationals; A is m rows by n cols.
bool lp_feasible(const Mat& a, const Vec& b);

// x in conv(points)? points are the rows; exact.
bool in_convex_hull(const std::vector<std::vector<Integer>>& points, const std::vector<Integer>& x);

}  // namespace kflag
