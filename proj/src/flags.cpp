#include "flags.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "errors.hpp"

namespace kflag {

namespace {

// Reduce v against RREF rows; returns the remainder and (optionally) the
// coefficients used per row.
Vec reduce_against(const Mat& rows, const std::vector<int>& pivots, Vec v,
                   std::vector<Rational>* coeffs) {
  if (coeffs) coeffs->assign(rows.size(), Rational(0));
  for (size_t r = 0; r < rows.size(); ++r) {
    const Rational c = v[pivots[r]];
    if (c == 0) continue;
    if (coeffs) (*coeffs)[r] = c;
    for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[r][j];
  }
  return v;
}

std::vector<int> pivot_columns(const Mat& rref_rows, int ambient) {
  std::vector<int> piv;
  piv.reserve(rref_rows.size());
  for (const Vec& row : rref_rows) {
    int p = 0;
    while (p < ambient && row[p] == 0) ++p;
    piv.push_back(p);
  }
  return piv;
}

}  // namespace

Subspace Subspace::span(const Mat& rows, int ambient) {
  require(ambient >= 0, Errc::invalid_argument, "ambient dimension must be nonnegative");
  for (const Vec& r : rows)
    require(static_cast<int>(r.size()) == ambient, Errc::invalid_argument,
            "row length does not match ambient dimension");
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = rows;
  rref(s.rows_);
  s.pivots_ = pivot_columns(s.rows_, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Mat id(ambient, Vec(ambient, Rational(0)));
  for (int i = 0; i < ambient; ++i) id[i][i] = 1;
  return span(id, ambient);
}

bool Subspace::contains(const Vec& v) const {
  require(static_cast<int>(v.size()) == ambient_, Errc::invalid_argument,
          "vector length does not match ambient dimension");
  return is_zero_vec(reduce_against(rows_, pivots_, v, nullptr));
}

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_ == ambient_, Errc::invalid_argument, "ambient dimensions differ");
  for (const Vec& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  std::vector<Rational> coeffs;
  Vec rem = reduce_against(rows_, pivots_, v, &coeffs);
  require(is_zero_vec(rem), Errc::invalid_argument, "vector not contained in subspace");
  return coeffs;
}

// Zassenhaus: RREF of [A|A; B|0]; rows whose left half vanished carry the
// intersection in the right half.
Subspace intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient() == b.ambient(), Errc::invalid_argument, "ambient dimensions differ");
  const int n = a.ambient();
  Mat z;
  for (const Vec& r : a.rows()) {
    Vec row(2 * n, Rational(0));
    for (int j = 0; j < n; ++j) row[j] = row[n + j] = r[j];
    z.push_back(std::move(row));
  }
  for (const Vec& r : b.rows()) {
    Vec row(2 * n, Rational(0));
    for (int j = 0; j < n; ++j) row[j] = r[j];
    z.push_back(std::move(row));
  }
  rref(z);
  Mat inter;
  for (const Vec& row : z) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j) left_zero = row[j] == 0;
    if (!left_zero) continue;
    inter.emplace_back(row.begin() + n, row.end());
  }
  return Subspace::span(inter, n);
}

Subspace add(const Subspace& a, const Subspace& b) {
  require(a.ambient() == b.ambient(), Errc::invalid_argument, "ambient dimensions differ");
  Mat rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return Subspace::span(rows, a.ambient());
}

WeightedFlag WeightedFlag::make(std::vector<FlagStep> steps) {
  require(!steps.empty(), Errc::invalid_argument, "flag needs at least one step");
  const int n = steps.front().space.ambient();
  require(steps.front().space.dim() >= 1, Errc::invalid_argument,
          "first flag step must be a nonzero subspace");
  Rational trace(0);
  int prev_dim = 0;
  for (size_t i = 0; i < steps.size(); ++i) {
    require(steps[i].space.ambient() == n, Errc::invalid_argument,
            "flag steps live in different ambient spaces");
    if (i > 0) {
      require(steps[i].weight > steps[i - 1].weight, Errc::invalid_argument,
              "flag weights must be strictly increasing");
      require(steps[i].space.dim() > steps[i - 1].space.dim() &&
                  steps[i].space.contains(steps[i - 1].space),
              Errc::invalid_argument, "flag subspaces must be strictly increasing");
    }
    trace += Rational(steps[i].space.dim() - prev_dim) * steps[i].weight;
    prev_dim = steps[i].space.dim();
  }
  require(steps.back().space.is_full(), Errc::invalid_argument,
          "flag must end at the full ambient space");
  require(trace == 0, Errc::invalid_argument, "flag weights must have zero trace");
  return WeightedFlag(std::move(steps));
}

WeightedFlag WeightedFlag::trivial(int ambient) {
  require(ambient >= 1, Errc::invalid_argument, "ambient dimension must be positive");
  return make({{Subspace::full(ambient), Rational(0)}});
}

bool operator==(const WeightedFlag& f, const WeightedFlag& g) {
  if (f.steps_.size() != g.steps_.size()) return false;
  for (size_t i = 0; i < f.steps_.size(); ++i)
    if (!(f.steps_[i].space == g.steps_[i].space && f.steps_[i].weight == g.steps_[i].weight))
      return false;
  return true;
}

ApartmentPoint ApartmentPoint::make(Mat basis, std::vector<Rational> weights) {
  const int n = static_cast<int>(basis.size());
  require(n >= 1, Errc::invalid_argument, "basis must be nonempty");
  require(weights.size() == basis.size(), Errc::invalid_argument,
          "one weight per basis vector required");
  for (const Vec& v : basis)
    require(static_cast<int>(v.size()) == n, Errc::invalid_argument, "basis must be square");
  require(rank(basis) == n, Errc::invalid_argument, "basis vectors must be independent");
  Rational s(0);
  for (const Rational& w : weights) s += w;
  require(s == 0, Errc::invalid_argument, "apartment weights must sum to zero");
  ApartmentPoint p;
  p.basis = std::move(basis);
  p.weights = std::move(weights);
  return p;
}

WeightedFlag flag_from_weights(const ApartmentPoint& p) {
  std::map<Rational, Mat> by_weight;
  for (size_t i = 0; i < p.basis.size(); ++i) by_weight[p.weights[i]].push_back(p.basis[i]);
  if (by_weight.size() == 1) return WeightedFlag::trivial(static_cast<int>(p.basis.size()));
  std::vector<FlagStep> steps;
  Mat acc;
  for (const auto& [w, vecs] : by_weight) {
    acc.insert(acc.end(), vecs.begin(), vecs.end());
    steps.push_back({Subspace::span(acc, static_cast<int>(p.basis.size())), w});
  }
  return WeightedFlag::make(std::move(steps));
}

Rational weight_of_vector(const WeightedFlag& f, const Vec& v) {
  require(!is_zero_vec(v), Errc::zero_vector, "weight of the zero vector is undefined");
  for (const FlagStep& st : f.steps())
    if (st.space.contains(v)) return st.weight;
  fail(Errc::internal, "flag does not exhaust the ambient space");
}

bool is_equivalent(const WeightedFlag& f, const WeightedFlag& g) {
  if (f.ambient() != g.ambient()) return false;
  if (f.is_trivial() || g.is_trivial()) return f.is_trivial() && g.is_trivial();
  if (f.steps().size() != g.steps().size()) return false;
  for (size_t i = 0; i < f.steps().size(); ++i)
    if (!(f.steps()[i].space == g.steps()[i].space)) return false;
  // Nontrivial flags have a nonzero weight; fix the ratio there.
  Rational ratio(0);
  for (size_t i = 0; i < f.steps().size(); ++i) {
    const Rational& a = f.steps()[i].weight;
    const Rational& b = g.steps()[i].weight;
    if (a == 0 || b == 0) {
      if (!(a == 0 && b == 0)) return false;
      continue;
    }
    if (ratio == 0) {
      ratio = b / a;
      if (ratio <= 0) return false;
    } else if (b != ratio * a) {
      return false;
    }
  }
  return ratio != 0;
}

WeightedFlag canonical_form(const WeightedFlag& f) {
  if (f.is_trivial()) return f;
  Integer lcm_den(1);
  for (const FlagStep& st : f.steps())
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(st.weight));
  std::vector<Integer> ints;
  for (const FlagStep& st : f.steps()) {
    Rational scaled = st.weight * Rational(lcm_den);
    ints.push_back(numerator(scaled));
  }
  Integer g = gcd_all(ints);
  std::vector<FlagStep> steps = f.steps();
  for (size_t i = 0; i < steps.size(); ++i) steps[i].weight = Rational(ints[i] / g);
  return WeightedFlag::make(std::move(steps));
}

bool is_adapted(const Mat& basis, const WeightedFlag& f) {
  const int n = f.ambient();
  require(static_cast<int>(basis.size()) == n, Errc::invalid_argument,
          "adapted basis must have ambient many vectors");
  for (const Vec& v : basis)
    require(static_cast<int>(v.size()) == n, Errc::invalid_argument, "basis must be square");
  require(rank(basis) == n, Errc::invalid_argument, "basis vectors must be independent");
  for (const FlagStep& st : f.steps()) {
    int count = 0;
    for (const Vec& v : basis)
      if (st.space.contains(v)) ++count;
    if (count != st.space.dim()) return false;
  }
  return true;
}

CommonApartment common_apartment(const WeightedFlag& f, const WeightedFlag& g) {
  require(f.ambient() == g.ambient(), Errc::invalid_argument, "ambient dimensions differ");
  const int n = f.ambient();

  CommonApartment out;
  Mat chosen_rref;  // RREF span of everything picked so far

  auto step_space = [](const WeightedFlag& fl, int i) {
    return i == 0 ? Subspace::zero(fl.ambient()) : fl.steps()[i - 1].space;
  };

  for (size_t i = 1; i <= f.steps().size(); ++i) {
    for (size_t j = 1; j <= g.steps().size(); ++j) {
      Subspace t = intersect(step_space(f, i), step_space(g, j));
      Subspace s = add(intersect(step_space(f, i - 1), step_space(g, j)),
                       intersect(step_space(f, i), step_space(g, j - 1)));
      Mat cell = s.rows();
      rref(cell);
      for (const Vec& cand : t.rows()) {
        Mat test = cell;
        test.push_back(cand);
        rref(test);
        if (test.size() == cell.size()) continue;  // dependent on S + earlier picks
        cell = std::move(test);
        out.basis.push_back(cand);
        out.weights_f.push_back(f.steps()[i - 1].weight);
        out.weights_g.push_back(g.steps()[j - 1].weight);
        chosen_rref.push_back(cand);
      }
    }
  }

  rref(chosen_rref);
  require(static_cast<int>(chosen_rref.size()) == n &&
              static_cast<int>(out.basis.size()) == n,
          Errc::internal, "grid construction did not produce a basis");
  require(is_adapted(out.basis, f) && is_adapted(out.basis, g), Errc::internal,
          "grid basis is not adapted to both flags");
  return out;
}

double CosineTriple::cos_value() const {
  return to_double(dot) / std::sqrt(to_double(nu) * to_double(nv));
}

double CosineTriple::radians() const {
  double c = cos_value();
  c = std::min(1.0, std::max(-1.0, c));
  return std::acos(c);
}

std::optional<Rational> CosineTriple::exact_cos() const {
  Rational root;
  if (!rational_sqrt_exact(nu * nv, &root)) return std::nullopt;
  return dot / root;
}

bool CosineTriple::same_angle(const CosineTriple& o) const {
  const int sa = dot == 0 ? 0 : (dot > 0 ? 1 : -1);
  const int sb = o.dot == 0 ? 0 : (o.dot > 0 ? 1 : -1);
  if (sa != sb) return false;
  return dot * dot * o.nu * o.nv == o.dot * o.dot * nu * nv;
}

CosineTriple tits_cosine(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  require(u.size() == v.size() && !u.empty(), Errc::invalid_argument,
          "weight vectors must have equal positive length");
  Rational su(0), sv(0);
  for (const Rational& x : u) su += x;
  for (const Rational& x : v) sv += x;
  require(su == 0 && sv == 0, Errc::invalid_argument, "weight vectors must have zero trace");
  CosineTriple t{Rational(0), Rational(0), Rational(0)};
  for (size_t i = 0; i < u.size(); ++i) {
    t.dot += u[i] * v[i];
    t.nu += u[i] * u[i];
    t.nv += v[i] * v[i];
  }
  require(t.nu != 0 && t.nv != 0, Errc::zero_weight_vector,
          "tits cosine needs nonzero weight vectors");
  return t;
}

CosineTriple flag_cosine(const WeightedFlag& f, const WeightedFlag& g) {
  require(!f.is_trivial() && !g.is_trivial(), Errc::trivial_flag,
          "angle to a trivial flag is undefined");
  CommonApartment ap = common_apartment(f, g);
  return tits_cosine(ap.weights_f, ap.weights_g);
}

double tits_distance(const WeightedFlag& f, const WeightedFlag& g) {
  return flag_cosine(f, g).radians();
}

}  // namespace kflag
