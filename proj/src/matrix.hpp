#pragma once

// Small exact linear algebra over Rational: reduced row echelon form, rank,
// and right kernels. Everything here works on row-major matrices of modest
// size; flags and retractions never need more.

#include <vector>

#include "rational.hpp"

namespace kflag {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // rows of equal length

bool is_zero_vec(const Vec& v);

// In-place reduced row echelon form. Returns the pivot columns in order.
// Zero rows are removed.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Basis of {x : m x = 0} (column vectors returned as Vecs), in the
// conventional free-column order.
std::vector<Vec> right_kernel(const Mat& m, int cols);

Mat transpose(const Mat& m, int cols);

// x * m for a row vector x (x.size() == m.size()).
Vec row_times(const Vec& x, const Mat& m, int cols);

}  // namespace kflag
