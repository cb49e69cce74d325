#pragma once

// Morphisms of the direct system: the Segre map on apartment points, the
// retraction of a flag onto a subspace, iota = retraction after Segre
// (computed combinatorially on the monomial testbed, with a linear-algebra
// path kept for cross-checks), and the limit pseudo-metric d_infinity.

#include <vector>

#include "flags.hpp"
#include "testbed.hpp"

namespace kflag {

using MultiIndex = std::vector<int>;

// All multi-indices of length m summing to k, descending lexicographic.
std::vector<MultiIndex> multi_indices(int m, int k);

struct SegreImage {
  std::vector<MultiIndex> indices;  // labels the monomial basis
  ApartmentPoint point;             // coordinates relative to that basis
};

// Monomial weights w^I = sum_j I_j w_j, recentered to zero trace by
// subtracting their mean.
SegreImage segre(const ApartmentPoint& p, int k);

// Flag rule F_i -> F_i intersect W: zero steps skipped, repeated subspaces
// keep the first (smallest-weight) occurrence, weights shifted back to zero
// trace over W. Output in W coordinates (relative to W's RREF rows); fewer
// than two surviving steps gives the trivial flag on W.
WeightedFlag retraction(const WeightedFlag& f, const Subspace& w);

// Span of v_u = sum of monomial basis vectors whose exponent pattern sums to
// the lattice point u, over u in sections(k*r). Realizes the multiplication
// pairing between level r and level k*r sections inside Sym^k.
Subspace comultiplication_subspace(const ToricPolarization& x, int r, int k);

struct IotaLinear {
  WeightedFlag flag;  // retraction of the Segre flag, in W coordinates
  Subspace w;
  std::vector<MultiIndex> indices;
};

// The linear-algebra route for iota; quadratic-size in the symmetric power,
// intended for small cross-checks against the DP route.
IotaLinear iota_linear(const ToricPolarization& x, const MonomialConfig& c, int k);

// iota through induced weights: exponent k*r config whose weights are the
// DP maxima recentered to zero sum. No rescaling (the L2 norm is preserved
// exactly); apply config_canonical for the canonical representative.
MonomialConfig iota_config(const ToricPolarization& x, const MonomialConfig& c, int k);

// Tits cosine of the two induced flags at a common absolute exponent, which
// both configs' levels must divide.
CosineTriple finite_level_cosine(const ToricPolarization& x, const MonomialConfig& a,
                                 const MonomialConfig& b, int exponent);

struct DInfinityResult {
  CosineTriple triple;  // corrected leading coefficients (c_AB, c_A, c_B)
  double radians = 0;
  int stride = 1;
};

// Leading coefficients of the three traceless trace pairings along levels
// k*lcm(r_A, r_B), via verified fits with a linear stride search on failure
// (cross pairings can be quasi-polynomial; see weight_polynomials).
DInfinityResult d_infinity(const ToricPolarization& x, const MonomialConfig& a,
                           const MonomialConfig& b, const FitOptions& opts = {});

}  // namespace kflag
