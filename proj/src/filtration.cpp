#include "filtration.hpp"

#include <cmath>

#include "errors.hpp"

namespace kflag {

namespace {

Rational mean_of(const Vec& v) {
  Rational s(0);
  for (const Rational& x : v) s += x;
  return s / Rational(static_cast<long long>(v.size()));
}

// Traceless-adjusted pairing sum(a*b) - sum(a)sum(b)/h on a common level.
Rational adjusted_pairing(const Vec& a, const Vec& b) {
  Rational sab(0), sa(0), sb(0);
  for (size_t i = 0; i < a.size(); ++i) {
    sab += a[i] * b[i];
    sa += a[i];
    sb += b[i];
  }
  return sab - sa * sb / Rational(static_cast<long long>(a.size()));
}

}  // namespace

Vec raw_weights(const ToricPolarization& x, const FiltrationSpec& f, int m) {
  require(m >= 1, Errc::invalid_argument, "filtration level must be positive");
  const auto& pts = x.sections(m);
  Vec out;
  out.reserve(pts.size());

  switch (f.kind) {
    case FiltrationKind::linear_rational: {
      require(f.linear_c.size() == static_cast<size_t>(x.dim()), Errc::invalid_argument,
              "linear filtration covector dimension mismatch");
      for (const LatticePoint& u : pts) {
        Rational w(0);
        for (int d = 0; d < x.dim(); ++d) w += f.linear_c[d] * Rational(u[d]);
        out.push_back(w);
      }
      break;
    }
    case FiltrationKind::floor_quad: {
      require(f.direction.size() == static_cast<size_t>(x.dim()), Errc::invalid_argument,
              "floor filtration direction dimension mismatch");
      for (const LatticePoint& u : pts) {
        long long e = 0;
        for (int d = 0; d < x.dim(); ++d) e += f.direction[d] * u[d];
        out.emplace_back(floor_quad(scale(f.alpha, Rational(e))));
      }
      break;
    }
    case FiltrationKind::table: {
      require(m <= static_cast<int>(f.table.size()), Errc::invalid_argument,
              "table filtration has no weights at level " + std::to_string(m));
      require(f.table[m - 1].size() == pts.size(), Errc::invalid_argument,
              "table filtration row length mismatch at level " + std::to_string(m));
      out = f.table[m - 1];
      break;
    }
  }

  const Rational bound = f.left_bound * Rational(m);
  for (const Rational& w : out)
    require(w >= bound, Errc::invalid_argument,
            "filtration violates its linear left bound at level " + std::to_string(m));
  return out;
}

MonomialConfig approximant_raw(const ToricPolarization& x, const FiltrationSpec& f, int m) {
  Vec w = raw_weights(x, f, m);
  const Rational mu = mean_of(w);
  for (Rational& v : w) v -= mu;
  return MonomialConfig::make(x, m, std::move(w));
}

MonomialConfig approximant(const ToricPolarization& x, const FiltrationSpec& f, int m) {
  return config_canonical(x, approximant_raw(x, f, m));
}

FiltrationNorms filtration_l2(const ToricPolarization& x, const FiltrationSpec& f,
                              int m_max, const FitOptions& opts) {
  require(m_max >= 2, Errc::invalid_argument, "filtration norm table needs m_max >= 2");
  FiltrationNorms out;
  for (int m = 1; m <= m_max; ++m)
    out.norm_sq.emplace_back(m, l2_norm_sq(x, approximant_raw(x, f, m), opts));
  out.extrapolated = std::sqrt(to_double(out.norm_sq.back().second));
  return out;
}

std::vector<CauchyRow> cauchy_table(const ToricPolarization& x, const FiltrationSpec& f,
                                    const std::vector<int>& m_list, int j,
                                    const FitOptions& opts) {
  require(j >= 2, Errc::invalid_argument, "cauchy table needs j >= 2");
  std::vector<CauchyRow> rows;
  for (int m : m_list) {
    CauchyRow row;
    row.m = m;
    row.d = d_infinity(x, approximant(x, f, m), approximant(x, f, j * m), opts);
    rows.push_back(std::move(row));
  }
  return rows;
}

TraceChainResult trace_chain_check(const ToricPolarization& x, const FiltrationSpec& f,
                                   int m, int j, const std::vector<int>& k_list) {
  require(m >= 1 && j >= 2, Errc::invalid_argument, "trace chain needs m >= 1, j >= 2");
  const MonomialConfig am = approximant_raw(x, f, m);
  const MonomialConfig ajm = approximant_raw(x, f, j * m);

  TraceChainResult out;
  for (int k : k_list) {
    require(k % (j * m) == 0, Errc::invalid_argument,
            "trace chain level must be divisible by j*m");
    const Vec a = induced_weights(x, am, k / m);
    const Vec b = induced_weights(x, ajm, k / (j * m));
    TraceChainRow row;
    row.k = k;
    row.t_mm = adjusted_pairing(a, a);
    row.t_mj = adjusted_pairing(a, b);
    row.t_jj = adjusted_pairing(b, b);
    row.ok = row.t_mm <= row.t_mj && row.t_mj <= row.t_jj;
    out.all_ok = out.all_ok && row.ok;
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::optional<MultiplicativityWitness> check_multiplicative(const ToricPolarization& x,
                                                            const FiltrationSpec& f,
                                                            int level_bound) {
  require(level_bound >= 2, Errc::invalid_argument, "multiplicativity bound too small");
  for (int ku = 1; ku + 1 <= level_bound; ++ku) {
    const Vec wu = raw_weights(x, f, ku);
    const auto& pu = x.sections(ku);
    for (int kv = ku; ku + kv <= level_bound; ++kv) {
      const Vec wv = raw_weights(x, f, kv);
      const auto& pv = x.sections(kv);
      const Vec wsum = raw_weights(x, f, ku + kv);
      for (size_t i = 0; i < pu.size(); ++i) {
        for (size_t t = 0; t < pv.size(); ++t) {
          LatticePoint s(x.dim());
          for (int d = 0; d < x.dim(); ++d) s[d] = pu[i][d] + pv[t][d];
          const int idx = x.section_index(ku + kv, s);
          require(idx >= 0, Errc::internal, "sum of sections left the dilate");
          if (wsum[idx] < wu[i] + wv[t]) {
            MultiplicativityWitness wit;
            wit.u = pu[i];
            wit.v = pv[t];
            wit.ku = ku;
            wit.kv = kv;
            wit.sum_weight = wsum[idx];
            wit.part_weights = wu[i] + wv[t];
            return wit;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace kflag
