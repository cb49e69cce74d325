#include "polynomial.hpp"

#include <algorithm>
#include <set>

namespace kflag {

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  if (c != 0) p.coeffs.push_back(c);
  return p;
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return Rational(0);
  return coeffs[i];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void Polynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs == q.coeffs; }

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  r.coeffs.resize(std::max(p.coeffs.size(), q.coeffs.size()), Rational(0));
  for (size_t i = 0; i < p.coeffs.size(); ++i) r.coeffs[i] += p.coeffs[i];
  for (size_t i = 0; i < q.coeffs.size(); ++i) r.coeffs[i] += q.coeffs[i];
  r.trim();
  return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  return p + Rational(-1) * q;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial::zero();
  Polynomial r;
  r.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, Rational(0));
  for (size_t i = 0; i < p.coeffs.size(); ++i)
    for (size_t j = 0; j < q.coeffs.size(); ++j) r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
  r.trim();
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r;
  if (c == 0) return r;
  r.coeffs = p.coeffs;
  for (Rational& a : r.coeffs) a *= c;
  return r;
}

FitPolynomial interpolate(const std::vector<Sample>& samples, int degree,
                          const std::vector<Sample>& holdouts) {
  require(degree >= 0, Errc::invalid_argument, "negative interpolation degree");
  require(samples.size() == static_cast<size_t>(degree) + 1, Errc::invalid_argument,
          "interpolation needs exactly degree+1 samples");
  require(!holdouts.empty(), Errc::invalid_argument, "interpolation needs a holdout sample");

  std::set<Rational> seen;
  for (const Sample& s : samples)
    require(seen.insert(s.first).second, Errc::duplicate_abscissa,
            "repeated sample abscissa " + rational_str(s.first));
  for (const Sample& h : holdouts)
    require(seen.insert(h.first).second, Errc::duplicate_abscissa,
            "holdout abscissa collides at " + rational_str(h.first));

  // Newton form: divided differences, then expansion into monomials.
  std::vector<Rational> dd;
  dd.reserve(samples.size());
  for (const Sample& s : samples) dd.push_back(s.second);
  for (size_t level = 1; level < samples.size(); ++level)
    for (size_t i = samples.size() - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].first - samples[i - level].first);

  Polynomial poly = Polynomial::constant(dd[0]);
  Polynomial basis = Polynomial::constant(Rational(1));
  for (size_t i = 1; i < samples.size(); ++i) {
    Polynomial lin;
    lin.coeffs = {-samples[i - 1].first, Rational(1)};
    basis = basis * lin;
    poly = poly + dd[i] * basis;
  }

  FitPolynomial fit;
  fit.poly = std::move(poly);
  fit.samples = samples;
  fit.holdouts = holdouts;
  fit.verified = true;
  for (const Sample& h : holdouts)
    if (fit.poly.eval(h.first) != h.second) fit.verified = false;
  return fit;
}

Rational leading_coefficient(const FitPolynomial& fit, int expected_degree) {
  require(fit.verified, Errc::unverified_fit,
          "leading coefficient requested from an unverified fit");
  require(fit.poly.degree() <= expected_degree, Errc::invalid_argument,
          "fit degree exceeds the expected degree");
  return fit.poly.coefficient(expected_degree);
}

std::vector<Rational> laurent_at_infinity(const Polynomial& num, const Polynomial& den,
                                          int terms) {
  require(!den.is_zero(), Errc::invalid_argument, "laurent expansion needs a nonzero denominator");
  require(num.degree() <= den.degree(), Errc::invalid_argument,
          "laurent expansion needs deg(num) <= deg(den)");
  int D = den.degree();
  // In t = 1/k both sides become power series with den's constant term equal
  // to its leading coefficient; ordinary series division from there.
  auto tcoeff = [D](const Polynomial& p, int i) { return p.coefficient(D - i); };
  std::vector<Rational> q(static_cast<size_t>(terms), Rational(0));
  Rational d0 = tcoeff(den, 0);
  for (int i = 0; i < terms; ++i) {
    Rational acc = tcoeff(num, i);
    for (int j = 0; j < i; ++j) acc -= q[j] * tcoeff(den, i - j);
    q[i] = acc / d0;
  }
  return q;
}

}  // namespace kflag
