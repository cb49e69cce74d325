#include "testbed.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "lp.hpp"
#include "matrix.hpp"

namespace kflag {

namespace {

Integer int_pow(long long base, int exp) {
  Integer r(1);
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Vec scale_to_coprime(const Vec& w) {
  Integer lcm_den(1);
  bool all_zero = true;
  for (const Rational& x : w) {
    if (x != 0) all_zero = false;
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  }
  if (all_zero) return w;
  std::vector<Integer> ints;
  ints.reserve(w.size());
  for (const Rational& x : w) ints.push_back(numerator(x * Rational(lcm_den)));
  const Integer g = gcd_all(ints);
  Vec out;
  out.reserve(w.size());
  for (const Integer& v : ints) out.emplace_back(v / g);
  return out;
}

}  // namespace

ToricPolarization ToricPolarization::make(int dim, std::vector<LatticePoint> points,
                                          int normality_check_bound) {
  require(dim >= 1, Errc::invalid_argument, "polytope dimension must be positive");
  require(!points.empty(), Errc::invalid_argument, "polytope needs lattice points");
  for (const LatticePoint& p : points)
    require(static_cast<int>(p.size()) == dim, Errc::invalid_argument,
            "lattice point dimension mismatch");
  std::sort(points.begin(), points.end());
  require(std::adjacent_find(points.begin(), points.end()) == points.end(),
          Errc::invalid_argument, "lattice points must be distinct");

  Mat diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    Vec row(dim);
    for (int j = 0; j < dim; ++j) row[j] = Rational(points[i][j] - points[0][j]);
    diffs.push_back(std::move(row));
  }
  require(rank(diffs) == dim, Errc::invalid_argument,
          "polytope must be full-dimensional");

  ToricPolarization x;
  x.dim_ = dim;
  x.points_ = std::move(points);

  // Normality spot check: lattice points of kP coincide with the Minkowski
  // sum L((k-1)P) + L(P).
  for (int k = 2; k <= normality_check_bound; ++k) {
    std::vector<LatticePoint> sums;
    for (const LatticePoint& a : x.sections(k - 1)) {
      for (const LatticePoint& b : x.points_) {
        LatticePoint s(dim);
        for (int j = 0; j < dim; ++j) s[j] = a[j] + b[j];
        sums.push_back(std::move(s));
      }
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    require(sums == x.sections(k), Errc::invalid_argument,
            "polytope is not normal at dilate " + std::to_string(k));
  }
  return x;
}

const std::vector<LatticePoint>& ToricPolarization::sections(int k) const {
  require(k >= 1, Errc::invalid_argument, "section level must be positive");
  auto it = memo_.find(k);
  if (it != memo_.end()) return it->second;

  std::vector<std::vector<Integer>> hull;
  hull.reserve(points_.size());
  for (const LatticePoint& p : points_) {
    std::vector<Integer> q(dim_);
    for (int j = 0; j < dim_; ++j) q[j] = Integer(p[j]) * k;
    hull.push_back(std::move(q));
  }

  std::vector<long long> lo(dim_), hi(dim_);
  for (int j = 0; j < dim_; ++j) {
    lo[j] = hi[j] = points_[0][j];
    for (const LatticePoint& p : points_) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
    lo[j] *= k;
    hi[j] *= k;
  }

  std::vector<LatticePoint> out;
  LatticePoint cur = lo;
  for (;;) {
    std::vector<Integer> q(dim_);
    for (int j = 0; j < dim_; ++j) q[j] = Integer(cur[j]);
    if (in_convex_hull(hull, q)) out.push_back(cur);
    int j = dim_ - 1;
    while (j >= 0 && cur[j] == hi[j]) {
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }
  // Box walk with the last coordinate fastest is already lexicographic.
  return memo_.emplace(k, std::move(out)).first->second;
}

int ToricPolarization::section_index(int k, const LatticePoint& u) const {
  const auto& pts = sections(k);
  auto it = std::lower_bound(pts.begin(), pts.end(), u);
  if (it == pts.end() || *it != u) return -1;
  return static_cast<int>(it - pts.begin());
}

MonomialConfig MonomialConfig::make(const ToricPolarization& x, int exponent, Vec weights) {
  require(exponent >= 1, Errc::invalid_argument, "config exponent must be positive");
  require(weights.size() == x.sections(exponent).size(), Errc::invalid_argument,
          "config needs one weight per lattice point of rP");
  Rational s(0);
  for (const Rational& w : weights) s += w;
  require(s == 0, Errc::invalid_argument, "config weights must sum to zero");
  return MonomialConfig{exponent, std::move(weights)};
}

MonomialConfig config_canonical(const ToricPolarization& x, const MonomialConfig& c) {
  return MonomialConfig::make(x, c.exponent, scale_to_coprime(c.weights));
}

Vec induced_weights(const ToricPolarization& x, const MonomialConfig& c, int k) {
  require(k >= 1, Errc::invalid_argument, "level multiplier must be positive");
  const int r = c.exponent;
  if (k == 1) return c.weights;

  const auto& base = x.sections(r);
  Vec prev = c.weights;
  std::vector<char> prev_ok(prev.size(), 1);

  for (int j = 2; j <= k; ++j) {
    const auto& level = x.sections(j * r);
    Vec cur(level.size());
    std::vector<char> ok(level.size(), 0);
    for (size_t t = 0; t < level.size(); ++t) {
      for (size_t v = 0; v < base.size(); ++v) {
        LatticePoint rest(x.dim());
        for (int d = 0; d < x.dim(); ++d) rest[d] = level[t][d] - base[v][d];
        const int idx = x.section_index((j - 1) * r, rest);
        if (idx < 0 || !prev_ok[idx]) continue;
        const Rational cand = prev[idx] + c.weights[v];
        if (!ok[t] || cand > cur[t]) {
          cur[t] = cand;
          ok[t] = 1;
        }
      }
      require(ok[t] != 0, Errc::unreachable_point,
              "lattice point with no decomposition; polytope not normal?");
    }
    prev = std::move(cur);
    prev_ok.assign(prev.size(), 1);
  }
  return prev;
}

ConfigPolys weight_polynomials(const ToricPolarization& x, const MonomialConfig& c,
                               const FitOptions& opts) {
  const int n = x.dim();
  const int span = n + 3 + opts.holdouts;  // largest multiplier used by tr2
  require(opts.holdouts >= 1, Errc::invalid_argument, "at least one holdout required");
  require(opts.k_max >= span, Errc::invalid_argument,
          "k_max too small for the fit degrees");

  for (int stride = 1;; ++stride) {
    std::vector<Rational> hv, wv, t2v;
    for (int i = 1; i <= span; ++i) {
      const Vec vals = induced_weights(x, c, stride * i);
      Rational s(0), s2(0);
      for (const Rational& v : vals) {
        s += v;
        s2 += v * v;
      }
      hv.push_back(Rational(static_cast<long long>(vals.size())));
      wv.push_back(s);
      t2v.push_back(s2);
    }

    auto fit = [&](const std::vector<Rational>& vals, int degree) {
      std::vector<Sample> samples, holdouts;
      for (int i = 1; i <= degree + 1; ++i)
        samples.emplace_back(Rational(stride * i), vals[i - 1]);
      for (int i = degree + 2; i <= degree + 1 + opts.holdouts; ++i)
        holdouts.emplace_back(Rational(stride * i), vals[i - 1]);
      return interpolate(samples, degree, holdouts);
    };

    ConfigPolys polys;
    polys.h = fit(hv, n);
    polys.w = fit(wv, n + 1);
    polys.tr2 = fit(t2v, n + 2);
    polys.stride = stride;
    if (polys.h.verified && polys.w.verified && polys.tr2.verified) return polys;

    if ((stride + 1) * span > opts.k_max) {
      std::string which = !polys.h.verified ? "h" : (!polys.w.verified ? "w" : "tr2");
      fail(Errc::fit_unstable,
           "fit for " + which + " failed holdout verification up to k_max");
    }
  }
}

Rational l2_norm_sq(const ToricPolarization& x, const ConfigPolys& polys, int exponent) {
  const int n = x.dim();
  const Rational a0 = leading_coefficient(polys.h, n);
  const Rational b0 = leading_coefficient(polys.w, n + 1);
  const Rational c2 = leading_coefficient(polys.tr2, n + 2);
  require(a0 > 0, Errc::internal, "hilbert polynomial must have positive leading term");
  return (c2 - b0 * b0 / a0) / Rational(int_pow(exponent, n + 2));
}

Rational l2_norm_sq(const ToricPolarization& x, const MonomialConfig& c,
                    const FitOptions& opts) {
  return l2_norm_sq(x, weight_polynomials(x, c, opts), c.exponent);
}

Rational level_r_norm_sq(const ToricPolarization& x, const MonomialConfig& c) {
  Rational s(0);
  for (const Rational& w : c.weights) s += w * w;
  return s / Rational(int_pow(c.exponent, x.dim() + 2));
}

bool is_almost_trivial(const ToricPolarization& x, const MonomialConfig& c,
                       const FitOptions& opts) {
  return l2_norm_sq(x, c, opts) == 0;
}

Rational chow_weight(const ToricPolarization& x, const MonomialConfig& c,
                    const ConfigPolys& polys, int k) {
  require(k >= 1, Errc::invalid_argument, "chow level must be positive");
  const int n = x.dim();
  const Rational a0 = leading_coefficient(polys.h, n);
  const Rational b0 = leading_coefficient(polys.w, n + 1);
  if (b0 == 0) fail(Errc::zero_b0, "chow weight formula undefined: b0 = 0");
  const Rational lam = level_r_norm_sq(x, c);
  const Rational kk(k);
  return (kk * Rational(c.exponent) * a0 / b0 -
          polys.w.poly.eval(kk) / polys.h.poly.eval(kk)) /
         lam;
}

Rational chow_weight(const ToricPolarization& x, const MonomialConfig& c, int k,
                    const FitOptions& opts) {
  return chow_weight(x, c, weight_polynomials(x, c, opts), k);
}

DfResult df_classical(const ToricPolarization& x, const MonomialConfig& c,
                      const ConfigPolys& polys, NormConvention convention) {
  const Rational l2 = l2_norm_sq(x, polys, c.exponent);
  if (l2 == 0) fail(Errc::almost_trivial, "df undefined for almost trivial configuration");

  Polynomial k_h;  // k * h(k)
  k_h.coeffs.assign(1, Rational(0));
  k_h.coeffs.insert(k_h.coeffs.end(), polys.h.poly.coeffs.begin(), polys.h.poly.coeffs.end());
  const std::vector<Rational> series = laurent_at_infinity(polys.w.poly, k_h, 2);

  DfResult out;
  out.df_raw = -series[1];
  out.norm_sq = convention == NormConvention::l2_limit ? l2 : level_r_norm_sq(x, c);
  out.df_normalized = to_double(out.df_raw) / std::sqrt(to_double(out.norm_sq));
  return out;
}

DfResult df_classical(const ToricPolarization& x, const MonomialConfig& c,
                      NormConvention convention, const FitOptions& opts) {
  return df_classical(x, c, weight_polynomials(x, c, opts), convention);
}

InvariantReport build_report(const ToricPolarization& x, const MonomialConfig& c,
                             NormConvention convention, const FitOptions& opts) {
  const int n = x.dim();
  InvariantReport rep;
  rep.polys = weight_polynomials(x, c, opts);
  rep.convention = convention;
  rep.a0 = leading_coefficient(rep.polys.h, n);
  rep.a1 = rep.polys.h.poly.coefficient(n - 1);
  rep.b0 = leading_coefficient(rep.polys.w, n + 1);
  rep.b1 = rep.polys.w.poly.coefficient(n);
  rep.l2_norm_sq = l2_norm_sq(x, rep.polys, c.exponent);
  rep.level_r_norm_sq = level_r_norm_sq(x, c);
  rep.almost_trivial = rep.l2_norm_sq == 0;
  if (!rep.almost_trivial) {
    const DfResult df = df_classical(x, c, rep.polys, convention);
    rep.df_raw = df.df_raw;
    rep.df_normalized = df.df_normalized;
  }
  rep.chow_defined = rep.b0 != 0;
  if (rep.chow_defined)
    for (int k = 1; k <= 5; ++k) rep.chow_values.emplace_back(k, chow_weight(x, c, rep.polys, k));
  return rep;
}

}  // namespace kflag
