#include "lp.hpp"

#include "errors.hpp"

namespace kflag {

// Minimize the sum of artificial variables; feasible iff that minimum is 0.
// Bland's rule guarantees termination without an anti-cycling perturbation.
bool lp_feasible(const Mat& a, const Vec& b) {
  const int m = static_cast<int>(a.size());
  require(b.size() == a.size(), Errc::invalid_argument, "lp: rhs length mismatch");
  const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
  if (m == 0) return true;

  // Tableau columns: n structural, m artificial, 1 rhs.
  Mat t(m, Vec(n + m + 1, Rational(0)));
  for (int i = 0; i < m; ++i) {
    require(static_cast<int>(a[i].size()) == n, Errc::invalid_argument, "lp: ragged matrix");
    const bool flip = b[i] < 0;
    for (int j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = flip ? -b[i] : b[i];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Objective row for min(sum of artificials): reduced cost of column j is
  // (sum over rows of t[i][j]) - cost_j, positive means improving.
  Vec obj(n + m + 1, Rational(0));
  for (int j = 0; j <= n + m; ++j) {
    for (int i = 0; i < m; ++i) obj[j] += t[i][j];
    if (j >= n && j < n + m) obj[j] -= 1;
  }

  for (;;) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][n + m] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    require(leave >= 0, Errc::internal, "lp: phase-1 objective unbounded");

    const Rational piv = t[leave][enter];
    for (int j = 0; j <= n + m; ++j) t[leave][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational c = t[i][enter];
      for (int j = 0; j <= n + m; ++j) t[i][j] -= c * t[leave][j];
    }
    const Rational c = obj[enter];
    for (int j = 0; j <= n + m; ++j) obj[j] -= c * t[leave][j];
    basis[leave] = enter;
  }

  return obj[n + m] == 0;
}

bool in_convex_hull(const std::vector<std::vector<Integer>>& points,
                    const std::vector<Integer>& x) {
  require(!points.empty(), Errc::invalid_argument, "hull membership needs points");
  const size_t d = x.size();
  // lambda >= 0, sum lambda = 1, sum lambda * p = x
  Mat a(d + 1, Vec(points.size(), Rational(0)));
  Vec b(d + 1, Rational(0));
  for (size_t j = 0; j < points.size(); ++j) {
    require(points[j].size() == d, Errc::invalid_argument, "hull: dimension mismatch");
    a[d][j] = 1;
    for (size_t i = 0; i < d; ++i) a[i][j] = Rational(points[j][i]);
  }
  for (size_t i = 0; i < d; ++i) b[i] = Rational(x[i]);
  b[d] = 1;
  return lp_feasible(a, b);
}

}  // namespace kflag
