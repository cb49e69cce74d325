#pragma once

// Exact rational arithmetic. Rational is GMP-backed (canonical form, positive
// denominator, gcd-reduced, maintained by the backend); this header adds the
// parsing, formatting and integer-rounding helpers the rest of the library
// needs.

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "errors.hpp"

namespace kflag {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Strict parser for "p/q" (q omitted when 1). Rejects anything else: empty
// strings, whitespace, q == 0, signs on q.
Rational parse_rational(const std::string& s);

// "p/q" with q omitted when 1; denominator always positive.
std::string rational_str(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// floor(a/b) for b != 0 (works for negative operands; mpz division truncates).
Integer floor_div(const Integer& a, const Integer& b);

inline Integer floor_rational(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

bool is_perfect_square(const Integer& n, Integer* root);

// True when r is the square of a rational; *root receives the nonnegative root.
bool rational_sqrt_exact(const Rational& r, Rational* root);

Integer gcd_all(const std::vector<Integer>& xs);

}  // namespace kflag
