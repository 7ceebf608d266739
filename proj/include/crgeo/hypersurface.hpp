#pragma once

// Real-analytic hypersurfaces {rho = 0} with polynomial defining functions in
// the Hermitian ring, their transforms under blow-up towers, the Cayley-type
// identification of the unit sphere with the model quadric, and the trace a
// transformed hypersurface leaves on an exceptional curve.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "crgeo/charts.hpp"
#include "crgeo/kernels.hpp"
#include "crgeo/poly.hpp"

namespace crgeo {

struct RealHypersurface {
  HermPoly rho;       // real symmetric (checked on construction)
  std::string chart;  // which chart the coordinates live in

  RealHypersurface(HermPoly r, std::string chart_id);
};

// Exact Wirtinger gradient (d rho/dz1, d rho/dz2) at a point.
std::array<ExactComplex, 2> gradient(const HermPoly& rho, const std::vector<ExactComplex>& p);

// Exact normalized Levi form at a point of {rho = 0}: the complex Hessian
// applied to the tangent direction v = (-d rho/dz2, d rho/dz1), divided by
// |v|^2. Throws when the gradient vanishes (the hypersurface is not smooth
// there, no tangent is singled out).
Rational levi_form_exact(const HermPoly& rho, const std::vector<ExactComplex>& p);

// Total transform with its reduced form: num is the raw pullback of rho, den
// the product of |e|^(2k) over the exceptional coordinates e of the chart,
// with k the largest power that can be cleared off {e = 0}; num/den is the
// defining function of the transformed hypersurface away from the
// exceptional locus.
struct ReducedEquation {
  HermRationalExpr expr;
  HoloPoly locus;  // product of the exceptional coordinates that were cleared
};

struct ProperTransformResult {
  RealHypersurface total;  // pullback with its polynomially-divisible |e|^2 powers removed
  ReducedEquation reduced;
};

ProperTransformResult proper_transform(const RealHypersurface& h, const BlowupTower& tower,
                                       const std::string& chart_id);

// The linear-fractional source change z1 = w1/(1-w2), z2 = i(1+w2)/(1-w2),
// defined off {w2 = 1}.
std::pair<RationalExpr, RationalExpr> cayley_substitution(const VarList& wvars);
ExactPoint2 cayley_point(const ExactPoint2& w);  // throws at w2 = 1

// Pullback of a Hermitian polynomial under the substitution above, cleared of
// the denominator: returns N with N = |1-w2|^(2D) * (rho o cayley) for the
// recorded degree D (per holomorphic/antiholomorphic block).
struct CayleyPullback {
  HermPoly cleared;        // N above
  unsigned degree_hol;     // power of (1-w2)
  unsigned degree_anti;    // power of (1-~w2)
};
CayleyPullback cayley_pullback(const HermPoly& rho);

// --- Traces on exceptional curves -----------------------------------------
//
// The trace of the transformed hypersurface on a curve {e = 0} is estimated
// by directional limits: at a curve point c, the reduced equation is sampled
// on the phase circle e = r_small * exp(i theta); the point is in the trace
// when the phase values change sign or come within a tolerance of zero.

struct TraceGrid {
  double pitch = 0.0;
  double half_extent = 0.0;  // grid covers [-half_extent, half_extent]^2
  std::size_t n = 0;         // points per side
  std::vector<uint8_t> detected;

  std::complex<double> site(std::size_t ix, std::size_t iy) const {
    return {-half_extent + pitch * static_cast<double>(ix),
            -half_extent + pitch * static_cast<double>(iy)};
  }
};

struct TraceOptions {
  double r_small = 1e-6;
  double r_check = 1e-5;  // second radius for the stabilization diagnostic
  int phases = 72;
  double detect_tol = 3e-3;
  double window = 3.0;   // half extent of the curve-coordinate window
  double pitch = 5e-3;
  ExecMode mode = ExecMode::parallel;
};

// Phase-circle structure of the limit values at one curve point:
// mean + dominant harmonic. When over the sampled points the dominant
// harmonic amplitude is |c| times a fixed factor and the mean is a fixed
// constant, the detected set has the closed form |c| >= |mean| / factor.
struct TraceAnalysis {
  bool closed_form = false;
  int harmonic = 0;
  double mean = 0.0;
  double amplitude_per_unit = 0.0;
  double threshold = 0.0;  // |c| >= threshold
  std::string description;
};

struct ExceptionalTrace {
  TraceGrid grid;
  TraceAnalysis analysis;
  std::string method;
  double stabilization_drift = 0.0;  // max |f(r_check) - f(r_small)| over the diagnostic subset
};

// `exc_index` is the local coordinate cutting the curve; the other coordinate
// parametrizes it.
ExceptionalTrace exceptional_trace(const HermRationalExpr& reduced, size_t exc_index,
                                   const TraceOptions& opt);

// Hausdorff distance between the detected set of the grid and the annulus
// {r_lo <= |c| <= r_hi}, both restricted to the grid window.
double hausdorff_to_annulus(const TraceGrid& grid, double r_lo, double r_hi);

// Directional cluster of a rational map at a source point: max distance of
// the images of a phase circle of sphere points at chart distance ~radius
// from `center`, measured against `target` in its affine chart.
struct ClusterSchedule {
  std::vector<double> radii;
  int phases = 72;
};

}  // namespace crgeo
