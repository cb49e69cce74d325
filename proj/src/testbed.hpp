#pragma once

// Monomial toric testbed: polarizations given by the lattice points of a
// normal polytope P, test configurations given by weight functions on the
// lattice points of rP, and the invariants extracted from exact polynomial
// fits of level data (Hilbert, weight and squared-trace polynomials).
//
// Convention: all level polynomials are in the multiplier k, i.e. h(k)
// counts sections at absolute level k*r for a config of exponent r. The
// absolute-level normalizations divide by r^{n+2} where needed.

#include <map>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace kflag {

using LatticePoint = std::vector<long long>;

class ToricPolarization {
 public:
  // Validates: points distinct, hull full-dimensional, and normality
  // (L(kP) = L((k-1)P) + L(P)) up to the given bound. The shipped polytopes
  // are classically normal; the bound is a construction-time spot check and
  // the induced-weight DP asserts reachability at every level it touches.
  static ToricPolarization make(int dim, std::vector<LatticePoint> points,
                                int normality_check_bound = 4);

  int dim() const { return dim_; }
  const std::vector<LatticePoint>& base_points() const { return points_; }

  // All lattice points of kP, lexicographic order, memoized.
  const std::vector<LatticePoint>& sections(int k) const;
  int section_index(int k, const LatticePoint& u) const;  // -1 when absent

 private:
  int dim_ = 0;
  std::vector<LatticePoint> points_;
  mutable std::map<int, std::vector<LatticePoint>> memo_;
};

struct MonomialConfig {
  int exponent = 1;
  Vec weights;  // aligned with sections(exponent), zero sum

  static MonomialConfig make(const ToricPolarization& x, int exponent, Vec weights);
};

// Weights scaled to coprime integers (zero config unchanged); the monomial
// counterpart of canonical_form on flags.
MonomialConfig config_canonical(const ToricPolarization& x, const MonomialConfig& c);

// Weight vector the config induces at absolute level k*exponent, aligned
// with sections(k*exponent): max over decompositions into k lattice points
// of rP of the summed weights, by dynamic programming over partial sums.
Vec induced_weights(const ToricPolarization& x, const MonomialConfig& c, int k);

struct FitOptions {
  int k_max = 100;   // cap on the sample multiplier during stride retries
  int holdouts = 2;  // holdout points per fit
};

struct ConfigPolys {
  FitPolynomial h;    // degree n
  FitPolynomial w;    // degree <= n+1
  FitPolynomial tr2;  // degree <= n+2
  int stride = 1;     // sample spacing that verified
};

// h(k), w(k), tr2(k) fitted from exact level sums, sampled at multiples of a
// stride searched linearly until every holdout verifies (FitUnstable at the
// cap). Level sums can be quasi-polynomial with a small period; sampling at
// multiples of that period restores exact polynomiality, so the stride must
// range over all small integers, not just powers of two.
ConfigPolys weight_polynomials(const ToricPolarization& x, const MonomialConfig& c,
                               const FitOptions& opts = {});

Rational l2_norm_sq(const ToricPolarization& x, const ConfigPolys& polys, int exponent);
Rational l2_norm_sq(const ToricPolarization& x, const MonomialConfig& c,
                    const FitOptions& opts = {});

// Level-r quantity r^{-n-2} * sum of squared weights (a squared norm).
Rational level_r_norm_sq(const ToricPolarization& x, const MonomialConfig& c);

bool is_almost_trivial(const ToricPolarization& x, const MonomialConfig& c,
                       const FitOptions& opts = {});

// Literal normalized Chow weight diagnostic: (k r a0/b0 - w(k)/h(k)) divided
// by the level-r squared norm. Throws ZeroB0 when b0 vanishes.
Rational chow_weight(const ToricPolarization& x, const MonomialConfig& c, int k,
                    const FitOptions& opts = {});
Rational chow_weight(const ToricPolarization& x, const MonomialConfig& c,
                    const ConfigPolys& polys, int k);

enum class NormConvention { l2_limit, level_r };

struct DfResult {
  Rational df_raw;          // minus the k^{-1} coefficient of w(k)/(k h(k))
  Rational norm_sq;         // the squared norm used for normalization
  double df_normalized = 0; // df_raw / sqrt(norm_sq)
};

DfResult df_classical(const ToricPolarization& x, const MonomialConfig& c,
                      NormConvention convention = NormConvention::l2_limit,
                      const FitOptions& opts = {});
DfResult df_classical(const ToricPolarization& x, const MonomialConfig& c,
                      const ConfigPolys& polys, NormConvention convention);

struct InvariantReport {
  ConfigPolys polys;
  Rational a0, a1, b0, b1;
  Rational l2_norm_sq;
  Rational level_r_norm_sq;
  Rational df_raw;
  double df_normalized = 0;
  NormConvention convention = NormConvention::l2_limit;
  bool almost_trivial = false;
  std::vector<std::pair<int, Rational>> chow_values;  // empty when b0 == 0
  bool chow_defined = false;
};

InvariantReport build_report(const ToricPolarization& x, const MonomialConfig& c,
                             NormConvention convention = NormConvention::l2_limit,
                             const FitOptions& opts = {});

}  // namespace kflag
