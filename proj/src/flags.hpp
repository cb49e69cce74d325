#pragma once

// Weighted flags, apartments, and the angular metric between flags realized
// through an exact common apartment. Subspaces are kept in reduced row
// echelon form so that equality of subspaces is equality of representations.

#include <optional>
#include <vector>

#include "matrix.hpp"
#include "rational.hpp"

namespace kflag {

class Subspace {
 public:
  Subspace() = default;

  // Row span of `rows` inside Q^ambient.
  static Subspace span(const Mat& rows, int ambient);
  static Subspace zero(int ambient) { return span({}, ambient); }
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return dim() == ambient_; }
  const Mat& rows() const { return rows_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v in the RREF basis (v must lie in the subspace).
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  int ambient_ = 0;
  Mat rows_;  // RREF, no zero rows
  std::vector<int> pivots_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace add(const Subspace& a, const Subspace& b);

struct FlagStep {
  Subspace space;
  Rational weight;
};

// Strictly increasing subspaces ending at the ambient space, strictly
// increasing weights, zero weighted trace. A single full-space step is the
// distinguished trivial flag.
class WeightedFlag {
 public:
  static WeightedFlag make(std::vector<FlagStep> steps);
  static WeightedFlag trivial(int ambient);

  int ambient() const { return steps_.back().space.ambient(); }
  bool is_trivial() const { return steps_.size() == 1; }
  const std::vector<FlagStep>& steps() const { return steps_; }

  friend bool operator==(const WeightedFlag& f, const WeightedFlag& g);

 private:
  explicit WeightedFlag(std::vector<FlagStep> steps) : steps_(std::move(steps)) {}
  std::vector<FlagStep> steps_;
};

struct ApartmentPoint {
  Mat basis;                     // n independent vectors in Q^n
  std::vector<Rational> weights; // one per basis vector, summing to zero

  static ApartmentPoint make(Mat basis, std::vector<Rational> weights);
};

WeightedFlag flag_from_weights(const ApartmentPoint& p);

// Smallest step weight whose subspace contains v (v != 0).
Rational weight_of_vector(const WeightedFlag& f, const Vec& v);

// Same subspace chain, weights equal up to one positive factor.
bool is_equivalent(const WeightedFlag& f, const WeightedFlag& g);

// Weights scaled to coprime integers; idempotent; equivalence classes map to
// a single representative.
WeightedFlag canonical_form(const WeightedFlag& f);

bool is_adapted(const Mat& basis, const WeightedFlag& f);

struct CommonApartment {
  Mat basis;
  std::vector<Rational> weights_f;
  std::vector<Rational> weights_g;
};

// Deterministic common adapted basis from the intersection grid F_i ∩ G_j,
// complements chosen greedily in RREF row order, cells visited
// lexicographically.
CommonApartment common_apartment(const WeightedFlag& f, const WeightedFlag& g);

// Exact cosine data: cos = dot / sqrt(nu * nv).
struct CosineTriple {
  Rational dot;
  Rational nu;
  Rational nv;

  double cos_value() const;
  double radians() const;
  // Exact rational cosine when nu*nv is a perfect rational square.
  std::optional<Rational> exact_cos() const;
  bool is_cos_one() const { return dot > 0 && dot * dot == nu * nv; }
  bool same_angle(const CosineTriple& o) const;
};

CosineTriple tits_cosine(const std::vector<Rational>& u, const std::vector<Rational>& v);
CosineTriple flag_cosine(const WeightedFlag& f, const WeightedFlag& g);
double tits_distance(const WeightedFlag& f, const WeightedFlag& g);

}  // namespace kflag
