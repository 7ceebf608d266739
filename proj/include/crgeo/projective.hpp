#pragma once

// Rational maps from C^2 (or a blow-up chart of it) to the projective plane,
// written as triples of polynomials with exact coefficients.
//
// A triple is normalized on construction: the largest common monomial factor
// is cleared, together with any supplied non-monomial factors that divide all
// three components exactly (trial division; no general gcd is attempted), and
// the whole triple is scaled so the first nonzero component has leading
// coefficient 1. Cleared factors are kept as provenance, which is what pole
// divisors and lifts report.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crgeo/charts.hpp"
#include "crgeo/poly.hpp"

namespace crgeo {

using Mat3 = std::array<std::array<ExactComplex, 3>, 3>;

Mat3 identity3();
Mat3 matmul(const Mat3& a, const Mat3& b);
ExactComplex det3(const Mat3& a);
Mat3 inverse3(const Mat3& a);  // throws when singular

struct ProjectivePoint {
  std::array<ExactComplex, 3> h;  // normalized: first nonzero entry is 1

  static ProjectivePoint of(const ExactComplex& a, const ExactComplex& b, const ExactComplex& c);
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.h == b.h;
  }
  std::string str() const;
};

class ProjectiveTriple {
 public:
  // Normalizing constructor: clears the common monomial factor and then each
  // of `clear_factors` as often as it divides all three components.
  ProjectiveTriple(std::array<HoloPoly, 3> comps, const std::vector<HoloPoly>& clear_factors = {});

  // Components taken verbatim (used by lift, whose division policy is "the
  // exceptional coordinates only").
  static ProjectiveTriple raw(std::array<HoloPoly, 3> comps, std::vector<HoloPoly> cleared = {});

  const std::array<HoloPoly, 3>& components() const { return c_; }
  const VarList& vars() const { return c_[0].vars(); }
  const std::vector<HoloPoly>& cleared_factors() const { return cleared_; }

  // nullopt when all three components vanish at the point (a base point).
  std::optional<ProjectivePoint> eval(const std::vector<ExactComplex>& point) const;
  std::array<std::complex<double>, 3> eval(const std::vector<std::complex<double>>& point) const;

  std::string str() const;  // "[P0 : P1 : P2]"
  friend bool operator==(const ProjectiveTriple& a, const ProjectiveTriple& b) {
    return a.c_ == b.c_;
  }

 private:
  ProjectiveTriple() = default;
  std::array<HoloPoly, 3> c_;
  std::vector<HoloPoly> cleared_;
};

// [f1 : f2 : 1] written over the common denominator.
ProjectiveTriple homogenize(const RationalExpr& f1, const RationalExpr& f2);

// Affine pair (c_a / c_k, c_b / c_k) with k the chosen denominator component
// and (a, b) the remaining components in order. Throws if c_k == 0.
std::pair<RationalExpr, RationalExpr> dehomogenize(const ProjectiveTriple& f, size_t den_index);

// Precompose a triple on C^2 with a rational substitution of its two source
// variables. Homogeneity of the result is restored with powers of the
// substitution denominators, which are then cleared again where possible.
ProjectiveTriple compose_source(const ProjectiveTriple& f, const RationalExpr& r1,
                                const RationalExpr& r2);

// Postcompose with an invertible linear change of the target plane.
ProjectiveTriple compose_target(const ProjectiveTriple& f, const Mat3& a);

struct BaseLocus {
  std::vector<ExactPoint2> points;  // sorted, deterministic
  bool certified_finite = false;    // resultants nonzero and all roots split exactly
  std::vector<std::string> notes;
};

// Common zeros of the three components, via pairwise Sylvester resultants:
// candidate second coordinates from a nonzero resultant, then exact
// specialization and root extraction, then exact verification on all three
// components. Every reported point is certified by construction.
BaseLocus base_locus(const ProjectiveTriple& f);

struct PoleDivisor {
  size_t chart_index;               // which component was the denominator
  HoloPoly divisor;                 // denominator component of the normalized triple
  std::vector<HoloPoly> cleared;    // factors removed during normalization
};

PoleDivisor pole_divisor(const ProjectiveTriple& f, size_t den_index);

// Pull the triple back through the total blow-down of `chart_id` and divide
// all three components by the maximal power of each exceptional coordinate.
ProjectiveTriple lift(const ProjectiveTriple& f, const BlowupTower& tower,
                      const std::string& chart_id);

// Substitute 0 for the chosen coordinate (the local equation of a curve).
// Throws when the triple vanishes identically there.
ProjectiveTriple restrict_to_coordinate(const ProjectiveTriple& f, size_t var);

struct ConstancyResult {
  bool constant = false;
  std::optional<ProjectivePoint> value;  // set when constant
};

// Decides whether a triple in at most one effective variable is projectively
// constant: all 2x2 minors with the derivative triple must vanish identically.
ConstancyResult is_constant(const ProjectiveTriple& f);

// Distance in the affine chart of the target point: both arguments are put in
// the chart where `target` has its largest entry, and coordinates compared in
// the maximum norm. Infinity when `p` leaves that chart.
double chart_distance(const std::array<std::complex<double>, 3>& p, const ProjectivePoint& target);

}  // namespace crgeo
