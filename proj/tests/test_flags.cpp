#include <doctest.h>

#include <cmath>
#include <random>

#include "errors.hpp"
#include "flags.hpp"

using namespace kflag;

namespace {

Vec rv(std::initializer_list<long long> xs) {
  Vec v;
  for (long long x : xs) v.push_back(Rational(x));
  return v;
}

// The coordinate flag of weight vector w on the standard basis of Q^n.
WeightedFlag coordinate_flag(std::initializer_list<long long> ws) {
  std::vector<Rational> weights;
  Mat basis;
  int n = static_cast<int>(ws.size());
  int i = 0;
  for (long long w : ws) {
    weights.push_back(Rational(w));
    Vec e(n, Rational(0));
    e[i++] = 1;
    basis.push_back(std::move(e));
  }
  return flag_from_weights(ApartmentPoint::make(std::move(basis), std::move(weights)));
}

}  // namespace

TEST_CASE("flag construction validates its invariants") {
  Subspace line = Subspace::span({rv({1, 0})}, 2);
  Subspace full = Subspace::full(2);

  CHECK_NOTHROW(WeightedFlag::make({{line, Rational(-1)}, {full, Rational(1)}}));

  // Weights must strictly increase.
  CHECK_THROWS_AS(WeightedFlag::make({{line, Rational(1)}, {full, Rational(1)}}), Error);
  // Last step must be the full space.
  CHECK_THROWS_AS(WeightedFlag::make({{line, Rational(0)}}), Error);
  // Weighted trace must vanish: 1*(-1) + 1*(2) != 0.
  CHECK_THROWS_AS(WeightedFlag::make({{line, Rational(-1)}, {full, Rational(2)}}), Error);
  // Subspaces must strictly increase.
  Subspace other = Subspace::span({rv({0, 1})}, 2);
  CHECK_THROWS_AS(
      WeightedFlag::make({{line, Rational(-1)}, {other, Rational(0)}, {full, Rational(1)}}),
      Error);

  const WeightedFlag t = WeightedFlag::trivial(3);
  CHECK(t.is_trivial());
  CHECK(t.ambient() == 3);
  CHECK(t.steps().size() == 1);
  CHECK(t.steps()[0].weight == 0);
}

TEST_CASE("flags from apartment weights group equal weights") {
  const WeightedFlag f = coordinate_flag({1, 0, -1});
  REQUIRE(f.steps().size() == 3);
  CHECK(f.steps()[0].space.dim() == 1);
  CHECK(f.steps()[0].weight == -1);
  CHECK(f.steps()[2].space.is_full());

  // All weights equal gives the trivial flag.
  CHECK(coordinate_flag({0, 0, 0}).is_trivial());

  // Repeated weights merge into one step.
  const WeightedFlag g = coordinate_flag({1, 1, -2});
  REQUIRE(g.steps().size() == 2);
  CHECK(g.steps()[0].space.dim() == 1);
  CHECK(g.steps()[0].weight == -2);
}

TEST_CASE("weight of a vector is the first containing step") {
  const WeightedFlag f = coordinate_flag({1, 0, -1});
  CHECK(weight_of_vector(f, rv({0, 0, 2})) == -1);
  CHECK(weight_of_vector(f, rv({0, 1, 5})) == 0);
  CHECK(weight_of_vector(f, rv({1, 1, 1})) == 1);
  CHECK_THROWS_AS(weight_of_vector(f, rv({0, 0, 0})), Error);
}

TEST_CASE("equivalence is scaling and canonical form picks the representative") {
  const WeightedFlag f = coordinate_flag({2, 0, -2});
  const WeightedFlag g = coordinate_flag({3, 0, -3});
  const WeightedFlag h = coordinate_flag({1, 1, -2});
  CHECK(is_equivalent(f, g));
  CHECK(!is_equivalent(f, h));
  CHECK(canonical_form(f) == canonical_form(g));
  CHECK(canonical_form(f) == coordinate_flag({1, 0, -1}));
  CHECK(canonical_form(canonical_form(f)) == canonical_form(f));

  const WeightedFlag q = coordinate_flag({-3, 1, 2});
  const WeightedFlag q2 = coordinate_flag({-6, 2, 4});
  CHECK(is_equivalent(q, q2));
  // Negated weights give a different flag chain, never equivalent.
  CHECK(!is_equivalent(q, coordinate_flag({3, -1, -2})));
}

TEST_CASE("common apartment is adapted to both flags") {
  const WeightedFlag f = coordinate_flag({1, 0, -1});
  // A flag not aligned with the coordinate axes.
  Subspace s1 = Subspace::span({rv({1, 1, 0})}, 3);
  Subspace s2 = Subspace::span({rv({1, 1, 0}), rv({0, 1, 1})}, 3);
  const WeightedFlag g = WeightedFlag::make(
      {{s1, Rational(-2)}, {s2, Rational(0)}, {Subspace::full(3), Rational(2)}});

  CommonApartment ap = common_apartment(f, g);
  REQUIRE(ap.basis.size() == 3);
  CHECK(is_adapted(ap.basis, f));
  CHECK(is_adapted(ap.basis, g));
  REQUIRE(ap.weights_f.size() == 3);
  REQUIRE(ap.weights_g.size() == 3);

  // The recovered weight of each basis vector matches weight_of_vector.
  for (size_t i = 0; i < ap.basis.size(); ++i) {
    CHECK(ap.weights_f[i] == weight_of_vector(f, ap.basis[i]));
    CHECK(ap.weights_g[i] == weight_of_vector(g, ap.basis[i]));
  }
}

TEST_CASE("tits cosine on the pi/3 fixture") {
  const WeightedFlag u = coordinate_flag({1, 0, -1});
  const WeightedFlag v = flag_from_weights(ApartmentPoint::make(
      {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}, {Rational(1), Rational(-1), Rational(0)}));

  CosineTriple t = flag_cosine(u, v);
  CHECK(t.dot == 1);
  CHECK(t.nu == 2);
  CHECK(t.nv == 2);
  REQUIRE(t.exact_cos().has_value());
  CHECK(*t.exact_cos() == Rational(1, 2));
  CHECK(tits_distance(u, v) == doctest::Approx(1.0471975512).epsilon(1e-10));
}

TEST_CASE("distance is zero on equivalent flags and pi on opposite ones") {
  const WeightedFlag f = coordinate_flag({1, 0, -1});
  CHECK(flag_cosine(f, f).is_cos_one());
  CHECK(tits_distance(f, coordinate_flag({2, 0, -2})) == 0.0);

  const WeightedFlag a = coordinate_flag({1, -1});
  const WeightedFlag b = coordinate_flag({-1, 1});
  CosineTriple t = flag_cosine(a, b);
  CHECK(t.dot == -2);
  CHECK(t.nu == 2);
  CHECK(t.nv == 2);
  CHECK(tits_distance(a, b) == doctest::Approx(3.14159265359).epsilon(1e-10));
}

TEST_CASE("trivial flags have no direction") {
  const WeightedFlag t = WeightedFlag::trivial(2);
  const WeightedFlag f = coordinate_flag({1, -1});
  CHECK_THROWS_AS(flag_cosine(t, f), Error);
  try {
    flag_cosine(f, t);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::trivial_flag);
  }
}

TEST_CASE("tits cosine input validation") {
  CHECK_THROWS_AS(tits_cosine({Rational(1)}, {Rational(1), Rational(-1)}), Error);
  // Zero weight vector has no angle.
  try {
    tits_cosine({Rational(0), Rational(0)}, {Rational(1), Rational(-1)});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_weight_vector);
  }
  // Non-traceless input is rejected.
  CHECK_THROWS_AS(tits_cosine({Rational(1), Rational(1)}, {Rational(1), Rational(-1)}), Error);
}

TEST_CASE("same_angle compares triples exactly") {
  CosineTriple a{Rational(1), Rational(2), Rational(2)};
  CosineTriple b{Rational(2), Rational(4), Rational(4)};  // same cos = 1/2
  CosineTriple c{Rational(1), Rational(2), Rational(3)};
  CHECK(a.same_angle(b));
  CHECK(!a.same_angle(c));
}

TEST_CASE("random flags: symmetry and identity hold exactly") {
  std::mt19937_64 rng(911);
  std::uniform_int_distribution<long long> wdist(-4, 4);
  std::uniform_int_distribution<int> coef(-2, 2);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    // Random unimodular-ish basis: identity plus a few row operations.
    Mat basis(n, Vec(n, Rational(0)));
    for (int i = 0; i < n; ++i) basis[i][i] = 1;
    for (int ops = 0; ops < n; ++ops) {
      int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
      if (i == j) continue;
      const Rational c(coef(rng));
      for (int col = 0; col < n; ++col) basis[i][col] += c * basis[j][col];
    }
    auto rand_weights = [&] {
      std::vector<Rational> w(n);
      Rational s(0);
      for (int i = 0; i + 1 < n; ++i) {
        w[i] = Rational(wdist(rng));
        s += w[i];
      }
      w[n - 1] = -s;
      return w;
    };
    WeightedFlag f = flag_from_weights(ApartmentPoint::make(basis, rand_weights()));
    WeightedFlag g = flag_from_weights(ApartmentPoint::make(basis, rand_weights()));
    if (f.is_trivial() || g.is_trivial()) continue;
    ++tested;
    CosineTriple fg = flag_cosine(f, g);
    CosineTriple gf = flag_cosine(g, f);
    CHECK(fg.same_angle(gf));
    CHECK(fg.dot * fg.dot <= fg.nu * fg.nv);  // exact Cauchy-Schwarz
    CHECK(flag_cosine(f, f).is_cos_one());
  }
  CHECK(tested > 200);
}
