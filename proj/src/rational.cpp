#include "rational.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <cctype>

namespace kflag {

namespace {

bool parse_integer(const std::string& s, size_t begin, size_t end, Integer* out) {
  if (begin >= end) return false;
  size_t i = begin;
  bool neg = false;
  if (s[i] == '-' || s[i] == '+') {
    neg = (s[i] == '-');
    ++i;
  }
  if (i >= end) return false;
  Integer v = 0;
  for (; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  *out = neg ? Integer(-v) : v;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  size_t slash = s.find('/');
  Integer num, den = 1;
  bool ok;
  if (slash == std::string::npos) {
    ok = parse_integer(s, 0, s.size(), &num);
  } else {
    ok = parse_integer(s, 0, slash, &num) && parse_integer(s, slash + 1, s.size(), &den);
    ok = ok && den > 0 && s[slash + 1] != '+';
  }
  require(ok, Errc::parse_error, "malformed rational '" + s + "'");
  return Rational(num) / Rational(den);
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  Integer s = isqrt(n);
  if (s * s != n) return false;
  if (root) *root = s;
  return true;
}

bool rational_sqrt_exact(const Rational& r, Rational* root) {
  if (r < 0) return false;
  Integer sn, sd;
  if (!is_perfect_square(numerator(r), &sn)) return false;
  if (!is_perfect_square(denominator(r), &sd)) return false;
  if (root) *root = Rational(sn) / Rational(sd);
  return true;
}

Integer gcd_all(const std::vector<Integer>& xs) {
  Integer g = 0;
  for (const Integer& x : xs) g = boost::multiprecision::gcd(g, x);
  return g;
}

}  // namespace kflag
