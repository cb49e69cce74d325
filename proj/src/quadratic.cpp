#include "quadratic.hpp"

#include <cmath>

namespace kflag {

namespace {

bool square_free(std::int64_t d) {
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
    while (d % p == 0) d /= p;
  }
  return true;
}

std::int64_t common_d(const QuadExt& x, const QuadExt& y) {
  if (x.d == y.d || y.b == 0) return x.d;
  if (x.b == 0) return y.d;
  fail(Errc::invalid_argument, "mixed quadratic extensions");
}

}  // namespace

QuadExt QuadExt::make(Rational a, Rational b, std::int64_t d) {
  require(d >= 1, Errc::invalid_argument, "quadratic radicand must be positive");
  require(square_free(d), Errc::invalid_argument, "quadratic radicand must be square-free");
  return QuadExt{std::move(a), std::move(b), d};
}

double QuadExt::to_double() const {
  return kflag::to_double(a) + kflag::to_double(b) * std::sqrt(static_cast<double>(d));
}

int sign(const QuadExt& x) {
  int sa = x.a.sign();
  int sb = x.b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(d) decided by squaring.
  Rational a2 = x.a * x.a;
  Rational b2d = x.b * x.b * x.d;
  if (a2 == b2d) return 0;
  return (a2 > b2d) ? sa : sb;
}

int compare(const QuadExt& x, const QuadExt& y) {
  std::int64_t d = common_d(x, y);
  QuadExt diff{x.a - y.a, x.b - y.b, d};
  return sign(diff);
}

QuadExt add(const QuadExt& x, const QuadExt& y) {
  std::int64_t d = common_d(x, y);
  return QuadExt{x.a + y.a, x.b + y.b, d};
}

QuadExt negate(const QuadExt& x) { return QuadExt{-x.a, -x.b, x.d}; }

QuadExt scale(const QuadExt& x, const Rational& c) {
  return QuadExt{x.a * c, x.b * c, x.d};
}

QuadExt mul(const QuadExt& x, const QuadExt& y) {
  std::int64_t d = common_d(x, y);
  return QuadExt{x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d};
}

Integer floor_quad(const QuadExt& x) {
  // Write x = (P + R*sqrt(d)) / m with integers P, R and m > 0. Then
  // floor(x) = floor((P + floor(R*sqrt(d))) / m): the irrational part lies in
  // a unit interval above its floor, which cannot move y/m past the next
  // integer boundary.
  Integer qa = denominator(x.a), qb = denominator(x.b);
  Integer m = qa * qb;
  Integer P = numerator(x.a) * qb;
  Integer R = numerator(x.b) * qa;
  Integer t;
  if (R >= 0) {
    t = isqrt(R * R * x.d);
  } else {
    Integer u = R * R * x.d;
    Integer s = isqrt(u);
    t = -s - (s * s == u ? 0 : 1);
  }
  return floor_div(P + t, m);
}

}  // namespace kflag
