#pragma once

// Real quadratic extension values a + b*sqrt(d) with rational a, b and a
// fixed positive square-free d. Ordering and floor are exact: comparisons
// reduce to integer sign tests, never to floating point.

#include <cstdint>

#include "rational.hpp"

namespace kflag {

struct QuadExt {
  Rational a;
  Rational b;
  std::int64_t d = 1;

  // Validates that d is a positive square-free integer.
  static QuadExt make(Rational a, Rational b, std::int64_t d);

  bool is_rational() const { return b == 0; }
  double to_double() const;
};

// Sign of a + b*sqrt(d): -1, 0, or +1.
int sign(const QuadExt& x);

// Total order on values sharing the same d (mixing d values is rejected
// unless one side is rational).
int compare(const QuadExt& x, const QuadExt& y);

QuadExt add(const QuadExt& x, const QuadExt& y);
QuadExt negate(const QuadExt& x);
QuadExt scale(const QuadExt& x, const Rational& c);
QuadExt mul(const QuadExt& x, const QuadExt& y);

// floor(a + b*sqrt(d)), exact.
Integer floor_quad(const QuadExt& x);

}  // namespace kflag
