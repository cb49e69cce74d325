#pragma once

// Dense univariate polynomials over Rational, plus verified interpolation:
// a fit is the Newton interpolant through exactly degree+1 samples, and is
// marked verified only when it also reproduces every holdout sample. Callers
// that consume asymptotic data (leading coefficients) must go through
// leading_coefficient(), which refuses unverified fits.

#include <utility>
#include <vector>

#include "rational.hpp"

namespace kflag {

struct Polynomial {
  // Coefficients lowest-degree first; trailing zeros trimmed; empty == zero.
  std::vector<Rational> coeffs;

  static Polynomial zero() { return Polynomial{}; }
  static Polynomial constant(const Rational& c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  Rational coefficient(int i) const;
  Rational eval(const Rational& x) const;
  void trim();
};

bool operator==(const Polynomial& p, const Polynomial& q);
Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& c, const Polynomial& p);

using Sample = std::pair<Rational, Rational>;  // (abscissa, value)

struct FitPolynomial {
  Polynomial poly;
  std::vector<Sample> samples;
  std::vector<Sample> holdouts;
  bool verified = false;
};

// Newton interpolation through samples (must hold exactly degree+1 of them,
// distinct abscissae) with at least one holdout. Throws DuplicateAbscissa on
// repeated sample or holdout abscissae. An interpolant that misses a holdout
// comes back with verified == false; that is data, not an error.
FitPolynomial interpolate(const std::vector<Sample>& samples, int degree,
                          const std::vector<Sample>& holdouts);

// Coefficient of x^expected_degree (zero when the fit has lower degree).
// Throws UnverifiedFit when the fit is not verified.
Rational leading_coefficient(const FitPolynomial& fit, int expected_degree);

// First `terms` coefficients of num(k)/den(k) expanded at k -> infinity:
// result[i] multiplies k^{-i}. Requires deg(num) <= deg(den) and den != 0.
std::vector<Rational> laurent_at_infinity(const Polynomial& num, const Polynomial& den,
                                          int terms);

}  // namespace kflag
