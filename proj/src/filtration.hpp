#pragma once

// Admissible filtrations of the section ring and their finitely generated
// approximants: the level-m weights cut a test configuration p_m, and the
// sequence p_m is probed for the Cauchy property under d_infinity, the trace
// inequality chain, and L2 norm convergence.

#include <optional>
#include <vector>

#include "maps.hpp"
#include "quadratic.hpp"
#include "testbed.hpp"

namespace kflag {

enum class FiltrationKind { linear_rational, floor_quad, table };

struct FiltrationSpec {
  FiltrationKind kind = FiltrationKind::linear_rational;
  Vec linear_c;                      // LINEAR_RATIONAL: weight = <c, u>
  QuadExt alpha;                     // FLOOR_QUAD: weight = floor(alpha * <e, u>)
  std::vector<long long> direction;  // FLOOR_QUAD covector e
  std::vector<Vec> table;            // TABLE: per-level weights, level 1 first
  Rational left_bound;               // C with lambda(u, k) >= C*k, checked per level
};

// Raw filtration weights on sections(m), in section order. Checks the linear
// left bound for the level. TABLE specs must cover the level.
Vec raw_weights(const ToricPolarization& x, const FiltrationSpec& f, int m);

// Level-m approximant as a configuration: raw weights recentered to zero
// sum. All-equal raw weights give the zero (almost trivial) configuration.
MonomialConfig approximant_raw(const ToricPolarization& x, const FiltrationSpec& f, int m);

// Canonical building point p_m.
MonomialConfig approximant(const ToricPolarization& x, const FiltrationSpec& f, int m);

struct FiltrationNorms {
  std::vector<std::pair<int, Rational>> norm_sq;  // (m, l2_norm_sq of raw p_m)
  double extrapolated = 0;                        // sqrt of the last entry
};

// L2 norms of the raw approximants; the exact table is the deliverable, the
// float is just the last row's square root.
FiltrationNorms filtration_l2(const ToricPolarization& x, const FiltrationSpec& f,
                              int m_max, const FitOptions& opts = {});

struct CauchyRow {
  int m = 0;
  DInfinityResult d;
};

// d_infinity(p_m, p_{jm}) for each m in m_list.
std::vector<CauchyRow> cauchy_table(const ToricPolarization& x, const FiltrationSpec& f,
                                    const std::vector<int>& m_list, int j,
                                    const FitOptions& opts = {});

struct TraceChainRow {
  int k = 0;
  Rational t_mm, t_mj, t_jj;  // traceless-adjusted traces at level k
  bool ok = false;            // t_mm <= t_mj <= t_jj
};

struct TraceChainResult {
  bool all_ok = true;
  std::vector<TraceChainRow> rows;
};

// The inequality chain Tr((A^(m))^2) <= Tr(A^(m) A^(jm)) <= Tr((A^(jm))^2)
// at each level in k_list (each divisible by j*m). Failures are witnesses,
// not errors.
TraceChainResult trace_chain_check(const ToricPolarization& x, const FiltrationSpec& f,
                                   int m, int j, const std::vector<int>& k_list);

struct MultiplicativityWitness {
  LatticePoint u, v;
  int ku = 0, kv = 0;
  Rational sum_weight, part_weights;  // lambda(u+v) < lambda(u) + lambda(v)
};

// Exhaustive superadditivity check over all level pairs with ku + kv <=
// level_bound; first violation wins.
std::optional<MultiplicativityWitness> check_multiplicative(const ToricPolarization& x,
                                                            const FiltrationSpec& f,
                                                            int level_bound);

}  // namespace kflag
