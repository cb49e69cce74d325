#include <doctest.h>

#include <cmath>
#include <random>

#include "errors.hpp"
#include "maps.hpp"

using namespace kflag;

namespace {

ToricPolarization p1() { return ToricPolarization::make(1, {{0}, {1}}); }

ApartmentPoint std_point(std::vector<Rational> weights) {
  const int n = static_cast<int>(weights.size());
  Mat basis(n, Vec(n, Rational(0)));
  for (int i = 0; i < n; ++i) basis[i][i] = 1;
  return ApartmentPoint::make(std::move(basis), std::move(weights));
}

}  // namespace

TEST_CASE("multi indices are descending lexicographic") {
  auto idx = multi_indices(2, 2);
  REQUIRE(idx.size() == 3);
  CHECK(idx[0] == MultiIndex{2, 0});
  CHECK(idx[1] == MultiIndex{1, 1});
  CHECK(idx[2] == MultiIndex{0, 2});

  auto idx32 = multi_indices(3, 2);
  REQUIRE(idx32.size() == 6);
  CHECK(idx32.front() == MultiIndex{2, 0, 0});
  CHECK(idx32.back() == MultiIndex{0, 0, 2});
  for (size_t i = 1; i < idx32.size(); ++i) CHECK(idx32[i - 1] > idx32[i]);
}

TEST_CASE("segre powers of the standard apartment point") {
  SegreImage s = segre(std_point({Rational(1), Rational(-1)}), 2);
  REQUIRE(s.point.weights.size() == 3);
  CHECK(s.point.weights[0] == 2);
  CHECK(s.point.weights[1] == 0);
  CHECK(s.point.weights[2] == -2);

  SegreImage s3 = segre(std_point({Rational(1), Rational(-1)}), 3);
  REQUIRE(s3.point.weights.size() == 4);
  CHECK(s3.point.weights == std::vector<Rational>{Rational(3), Rational(1), Rational(-1),
                                                  Rational(-3)});
}

TEST_CASE("segre output is exactly trace-zero on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> wdist(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    std::vector<Rational> w(m);
    Rational sum(0);
    for (int i = 0; i + 1 < m; ++i) {
      w[i] = Rational(wdist(rng));
      sum += w[i];
    }
    w[m - 1] = -sum;
    for (int k = 1; k <= 3; ++k) {
      SegreImage s = segre(std_point(w), k);
      Rational t(0);
      for (const Rational& x : s.point.weights) t += x;
      CHECK(t == 0);
      CHECK(s.indices.size() == s.point.weights.size());
    }
  }
}

TEST_CASE("retraction is a right inverse of inclusion") {
  // A flag on W = span(e1, e3) pushed into Q^3 and retracted back lands in
  // the same equivalence class.
  Subspace w = Subspace::span({{Rational(1), Rational(0), Rational(0)},
                               {Rational(0), Rational(0), Rational(1)}},
                              3);
  Subspace inner = Subspace::span({{Rational(0), Rational(0), Rational(1)}}, 3);
  const WeightedFlag f = WeightedFlag::make({{inner, Rational(-3)},
                                             {w, Rational(1)},
                                             {Subspace::full(3), Rational(2)}});
  WeightedFlag r = retraction(f, w);
  REQUIRE(r.steps().size() == 2);
  CHECK(r.ambient() == 2);
  // Weights (-3, 1) shifted to trace zero over W: (-2, 2).
  CHECK(r.steps()[0].weight == -2);
  CHECK(r.steps()[1].weight == 2);
  // In W coordinates the inner step is the second basis row of W.
  CHECK(r.steps()[0].space == Subspace::span({{Rational(0), Rational(1)}}, 2));
}

TEST_CASE("retraction collapses to the trivial flag when W misses the flag") {
  Subspace w = Subspace::span({{Rational(1), Rational(0), Rational(0)}}, 3);
  Subspace s1 = Subspace::span({{Rational(0), Rational(1), Rational(0)}}, 3);
  Subspace s2 = Subspace::span({{Rational(0), Rational(1), Rational(0)},
                                {Rational(0), Rational(0), Rational(1)}},
                               3);
  const WeightedFlag f = WeightedFlag::make(
      {{s1, Rational(-1)}, {s2, Rational(0)}, {Subspace::full(3), Rational(1)}});
  WeightedFlag r = retraction(f, w);
  CHECK(r.is_trivial());
  CHECK(r.ambient() == 1);
}

TEST_CASE("comultiplication subspace dimensions") {
  // P^1, O(1): every section of level k is hit by exactly one multi-index
  // class; W is all of Sym^k.
  ToricPolarization x = p1();
  Subspace w = comultiplication_subspace(x, 1, 2);
  CHECK(w.ambient() == 3);
  CHECK(w.is_full());

  // [0,2]: six multi-indices map onto five sections, W has dimension 5.
  ToricPolarization x2 = ToricPolarization::make(1, {{0}, {1}, {2}});
  Subspace w2 = comultiplication_subspace(x2, 1, 2);
  CHECK(w2.ambient() == 6);
  CHECK(w2.dim() == 5);
}

TEST_CASE("iota on the spec example and norm preservation") {
  ToricPolarization x = p1();
  MonomialConfig pos = MonomialConfig::make(x, 1, {Rational(1), Rational(-1)});
  MonomialConfig img = iota_config(x, pos, 2);
  CHECK(img.exponent == 2);
  CHECK(img.weights == Vec{Rational(2), Rational(0), Rational(-2)});

  MonomialConfig conic = MonomialConfig::make(x, 2, {Rational(-2), Rational(1), Rational(1)});
  for (int k = 2; k <= 3; ++k) {
    MonomialConfig up = iota_config(x, conic, k);
    CHECK(up.exponent == 2 * k);
    CHECK(l2_norm_sq(x, up) == l2_norm_sq(x, conic));  // exact, no rescaling
  }
}

TEST_CASE("iota composes multiplicatively in canonical form") {
  ToricPolarization x = p1();
  MonomialConfig conic = MonomialConfig::make(x, 2, {Rational(-2), Rational(1), Rational(1)});
  MonomialConfig twice = iota_config(x, iota_config(x, conic, 2), 2);
  MonomialConfig four = iota_config(x, conic, 4);
  CHECK(twice.exponent == four.exponent);
  CHECK(config_canonical(x, twice).weights == config_canonical(x, four).weights);
}

TEST_CASE("linear-algebra iota agrees with the DP route") {
  ToricPolarization x = p1();
  MonomialConfig conic = MonomialConfig::make(x, 2, {Rational(-2), Rational(1), Rational(1)});
  for (int k = 2; k <= 3; ++k) {
    IotaLinear lin = iota_linear(x, conic, k);
    MonomialConfig dp = iota_config(x, conic, k);
    REQUIRE(!lin.flag.is_trivial());
    const auto& base = x.sections(conic.exponent);
    const auto& secs = x.sections(k * conic.exponent);
    REQUIRE(static_cast<int>(secs.size()) == lin.w.dim());
    // The flag weight of v_u inside W must equal the DP weight at u.
    std::vector<Rational> lin_weights;
    for (const LatticePoint& u : secs) {
      Vec v(lin.indices.size(), Rational(0));
      for (size_t t = 0; t < lin.indices.size(); ++t) {
        LatticePoint sum(x.dim(), 0);
        for (size_t j = 0; j < base.size(); ++j)
          for (int d = 0; d < x.dim(); ++d) sum[d] += lin.indices[t][j] * base[j][d];
        if (sum == u) v[t] = 1;
      }
      lin_weights.push_back(weight_of_vector(lin.flag, lin.w.coordinates(v)));
    }
    CHECK(lin_weights == dp.weights);
  }
}

TEST_CASE("iota of the zero config has no direction") {
  ToricPolarization x = p1();
  MonomialConfig zero = MonomialConfig::make(x, 1, {Rational(0), Rational(0)});
  try {
    iota_config(x, zero, 2);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::almost_trivial_image);
  }
}

TEST_CASE("finite level cosines approach the limit triple") {
  ToricPolarization x = p1();
  MonomialConfig a = MonomialConfig::make(x, 1, {Rational(-1), Rational(1)});
  MonomialConfig b = MonomialConfig::make(x, 2, {Rational(-2), Rational(1), Rational(1)});
  const double limit = std::atan2(1.0, 2.0);  // arccos(2/sqrt(5))
  const double first =
      std::abs(std::acos(finite_level_cosine(x, a, b, 2).cos_value()) - limit);
  const double last =
      std::abs(std::acos(finite_level_cosine(x, a, b, 32).cos_value()) - limit);
  CHECK(last < first);
  CHECK(last < 0.05);
  CHECK_THROWS_AS(finite_level_cosine(x, a, b, 3), Error);  // 2 does not divide 3
}

TEST_CASE("d_infinity on the product/conic pair gives the frozen triple") {
  ToricPolarization x = p1();
  MonomialConfig a = MonomialConfig::make(x, 1, {Rational(-1), Rational(1)});
  MonomialConfig b = MonomialConfig::make(x, 2, {Rational(-2), Rational(1), Rational(1)});
  DInfinityResult d = d_infinity(x, a, b);
  CHECK(d.triple.dot == 2);
  CHECK(d.triple.nu == Rational(8, 3));
  CHECK(d.triple.nv == Rational(15, 8));
  // cos^2 = 4/5 exactly.
  CHECK(d.triple.dot * d.triple.dot * 5 == 4 * d.triple.nu * d.triple.nv);
  CHECK(d.radians == doctest::Approx(0.4636476090).epsilon(1e-10));

  DInfinityResult same = d_infinity(x, a, a);
  CHECK(same.triple.is_cos_one());
  CHECK(same.radians < 1e-7);
}

TEST_CASE("d_infinity rejects zero-norm configurations") {
  ToricPolarization x = p1();
  MonomialConfig a = MonomialConfig::make(x, 1, {Rational(-1), Rational(1)});
  MonomialConfig zero = MonomialConfig::make(x, 1, {Rational(0), Rational(0)});
  try {
    d_infinity(x, a, zero);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_norm);
  }
}

TEST_CASE("d_infinity reports FitUnstable when the level cap is too small") {
  // The approximant pair below is quasi-polynomial with period 3; with the
  // cap at 10 the stride search cannot reach a verifying stride.
  ToricPolarization x = p1();
  MonomialConfig a = MonomialConfig::make(
      x, 3, {Rational(-7, 4), Rational(-3, 4), Rational(1, 4), Rational(9, 4)});
  MonomialConfig b = MonomialConfig::make(
      x, 6,
      {Rational(-27, 7), Rational(-20, 7), Rational(-13, 7), Rational(1, 7), Rational(8, 7),
       Rational(22, 7), Rational(29, 7)});
  FitOptions opts;
  opts.k_max = 10;
  try {
    d_infinity(x, a, b, opts);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::fit_unstable);
  }
  // With the default cap the stride search succeeds.
  DInfinityResult d = d_infinity(x, a, b);
  CHECK(d.stride == 3);
  CHECK(d.radians > 0);
}
