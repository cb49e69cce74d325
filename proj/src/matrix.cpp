#include "matrix.hpp"

#include <algorithm>

namespace kflag {

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.erase(std::remove_if(m.begin(), m.end(), is_zero_vec), m.end());
  return pivots;
}

int rank(Mat m) {
  rref(m);
  return static_cast<int>(m.size());
}

std::vector<Vec> right_kernel(const Mat& m, int cols) {
  Mat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(cols, Rational(0));
    v[free_col] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat transpose(const Mat& m, int cols) {
  Mat t(cols, Vec(m.size(), Rational(0)));
  for (size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

Vec row_times(const Vec& x, const Mat& m, int cols) {
  Vec out(cols, Rational(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < cols; ++j) out[j] += x[i] * m[i][j];
  }
  return out;
}

}  // namespace kflag
