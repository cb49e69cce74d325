#include "maps.hpp"

#include <numeric>

#include "errors.hpp"

namespace kflag {

namespace {

void enumerate_indices(int m, int k, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (m == 1) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int i = k; i >= 0; --i) {
    cur.push_back(i);
    enumerate_indices(m - 1, k - i, cur, out);
    cur.pop_back();
  }
}

Vec mean_subtracted(Vec v) {
  Rational mean(0);
  for (const Rational& x : v) mean += x;
  mean /= Rational(static_cast<long long>(v.size()));
  for (Rational& x : v) x -= mean;
  return v;
}

Mat identity_mat(int n) {
  Mat id(n, Vec(n, Rational(0)));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace

std::vector<MultiIndex> multi_indices(int m, int k) {
  require(m >= 1 && k >= 1, Errc::invalid_argument, "multi-indices need m, k >= 1");
  std::vector<MultiIndex> out;
  MultiIndex cur;
  enumerate_indices(m, k, cur, out);
  return out;
}

SegreImage segre(const ApartmentPoint& p, int k) {
  require(k >= 1, Errc::invalid_argument, "segre power must be positive");
  const int m = static_cast<int>(p.weights.size());
  SegreImage img;
  img.indices = multi_indices(m, k);
  Vec w;
  w.reserve(img.indices.size());
  for (const MultiIndex& idx : img.indices) {
    Rational s(0);
    for (int j = 0; j < m; ++j) s += Rational(idx[j]) * p.weights[j];
    w.push_back(s);
  }
  const int dim = static_cast<int>(w.size());
  img.point = ApartmentPoint::make(identity_mat(dim), mean_subtracted(std::move(w)));
  return img;
}

WeightedFlag retraction(const WeightedFlag& f, const Subspace& w) {
  require(w.ambient() == f.ambient(), Errc::invalid_argument,
          "subspace ambient dimension mismatch");
  require(w.dim() >= 1, Errc::invalid_argument, "retraction needs a nonzero subspace");

  std::vector<FlagStep> kept;
  for (const FlagStep& st : f.steps()) {
    Subspace t = intersect(st.space, w);
    if (t.dim() == 0) continue;
    if (!kept.empty() && t == kept.back().space) continue;  // keep first occurrence
    kept.push_back({std::move(t), st.weight});
  }
  if (kept.size() < 2) return WeightedFlag::trivial(w.dim());

  // Rewrite in W coordinates and shift weights back to zero trace.
  Rational trace(0);
  int prev_dim = 0;
  for (const FlagStep& st : kept) {
    trace += Rational(st.space.dim() - prev_dim) * st.weight;
    prev_dim = st.space.dim();
  }
  const Rational shift = trace / Rational(w.dim());

  std::vector<FlagStep> steps;
  for (const FlagStep& st : kept) {
    Mat rows;
    for (const Vec& r : st.space.rows()) rows.push_back(w.coordinates(r));
    steps.push_back({Subspace::span(rows, w.dim()), st.weight - shift});
  }
  return WeightedFlag::make(std::move(steps));
}

Subspace comultiplication_subspace(const ToricPolarization& x, int r, int k) {
  const auto& base = x.sections(r);
  const auto indices = multi_indices(static_cast<int>(base.size()), k);
  const auto& targets = x.sections(k * r);

  Mat rows(targets.size(), Vec(indices.size(), Rational(0)));
  for (size_t i = 0; i < indices.size(); ++i) {
    LatticePoint sum(x.dim(), 0);
    for (size_t j = 0; j < base.size(); ++j)
      for (int d = 0; d < x.dim(); ++d) sum[d] += indices[i][j] * base[j][d];
    const int t = x.section_index(k * r, sum);
    require(t >= 0, Errc::internal, "monomial lands outside the dilated polytope");
    rows[t][i] = 1;
  }
  return Subspace::span(rows, static_cast<int>(indices.size()));
}

IotaLinear iota_linear(const ToricPolarization& x, const MonomialConfig& c, int k) {
  const int m = static_cast<int>(c.weights.size());
  ApartmentPoint p = ApartmentPoint::make(identity_mat(m), c.weights);
  SegreImage img = segre(p, k);
  WeightedFlag sf = flag_from_weights(img.point);
  IotaLinear out{WeightedFlag::trivial(1), Subspace(), std::move(img.indices)};
  out.w = comultiplication_subspace(x, c.exponent, k);
  out.flag = retraction(sf, out.w);
  return out;
}

MonomialConfig iota_config(const ToricPolarization& x, const MonomialConfig& c, int k) {
  Vec w = mean_subtracted(induced_weights(x, c, k));
  if (is_zero_vec(w)) fail(Errc::almost_trivial_image, "iota image is the trivial point");
  return MonomialConfig::make(x, k * c.exponent, std::move(w));
}

CosineTriple finite_level_cosine(const ToricPolarization& x, const MonomialConfig& a,
                                 const MonomialConfig& b, int exponent) {
  require(exponent >= 1 && exponent % a.exponent == 0 && exponent % b.exponent == 0,
          Errc::invalid_argument, "exponent must be a common multiple of both configs");
  Vec u = mean_subtracted(induced_weights(x, a, exponent / a.exponent));
  Vec v = mean_subtracted(induced_weights(x, b, exponent / b.exponent));
  return tits_cosine(u, v);
}

DInfinityResult d_infinity(const ToricPolarization& x, const MonomialConfig& a,
                           const MonomialConfig& b, const FitOptions& opts) {
  if (l2_norm_sq(x, a, opts) == 0 || l2_norm_sq(x, b, opts) == 0)
    fail(Errc::zero_norm, "d_infinity needs configurations of nonzero L2 norm");

  const int n = x.dim();
  const int lcm_exp = std::lcm(a.exponent, b.exponent);
  const int span = n + 3 + opts.holdouts;
  require(opts.k_max >= span, Errc::invalid_argument, "k_max too small for the fit degrees");

  for (int stride = 1;; ++stride) {
    std::vector<Rational> hv, wav, wbv, ab, aa, bb;
    for (int i = 1; i <= span; ++i) {
      const int level = stride * i * lcm_exp;
      const Vec u = induced_weights(x, a, level / a.exponent);
      const Vec v = induced_weights(x, b, level / b.exponent);
      Rational sa(0), sb(0), sab(0), saa(0), sbb(0);
      for (size_t t = 0; t < u.size(); ++t) {
        sa += u[t];
        sb += v[t];
        sab += u[t] * v[t];
        saa += u[t] * u[t];
        sbb += v[t] * v[t];
      }
      hv.push_back(Rational(static_cast<long long>(u.size())));
      wav.push_back(sa);
      wbv.push_back(sb);
      ab.push_back(sab);
      aa.push_back(saa);
      bb.push_back(sbb);
    }

    auto fit = [&](const std::vector<Rational>& vals, int degree) {
      std::vector<Sample> samples, holdouts;
      for (int i = 1; i <= degree + 1; ++i)
        samples.emplace_back(Rational(stride * i), vals[i - 1]);
      for (int i = degree + 2; i <= degree + 1 + opts.holdouts; ++i)
        holdouts.emplace_back(Rational(stride * i), vals[i - 1]);
      return interpolate(samples, degree, holdouts);
    };

    FitPolynomial h = fit(hv, n);
    FitPolynomial wa = fit(wav, n + 1);
    FitPolynomial wb = fit(wbv, n + 1);
    FitPolynomial pab = fit(ab, n + 2);
    FitPolynomial paa = fit(aa, n + 2);
    FitPolynomial pbb = fit(bb, n + 2);

    const bool ok = h.verified && wa.verified && wb.verified && pab.verified &&
                    paa.verified && pbb.verified;
    if (ok) {
      const Rational a0 = leading_coefficient(h, n);
      const Rational b0a = leading_coefficient(wa, n + 1);
      const Rational b0b = leading_coefficient(wb, n + 1);
      DInfinityResult out;
      out.triple.dot = leading_coefficient(pab, n + 2) - b0a * b0b / a0;
      out.triple.nu = leading_coefficient(paa, n + 2) - b0a * b0a / a0;
      out.triple.nv = leading_coefficient(pbb, n + 2) - b0b * b0b / a0;
      require(out.triple.nu > 0 && out.triple.nv > 0, Errc::internal,
              "traceless trace limit vanished for a nonzero-norm configuration");
      out.radians = out.triple.radians();
      out.stride = stride;
      return out;
    }
    if ((stride + 1) * span > opts.k_max)
      fail(Errc::fit_unstable, "trace pairing fits failed verification up to k_max");
  }
}

}  // namespace kflag
