#pragma once

// The worked construction the verification suite is about:
//
//   F = [w1^3 : -(1+w2)^2 (1-w2) : i (1+w2) (1-w2)^2]  on C^2_w,
//
// obtained from the plane map [z1^3 : z2^2 : z2] by the linear-fractional
// substitution z1 = w1/(1-w2), z2 = i(1+w2)/(1-w2) that carries the unit
// sphere S^3 = {|w1|^2 + |w2|^2 = 1} onto the model quadric
// M = {|z1|^2 = Im z2}. Its only indeterminacy points p± = (0, ±1) lie on
// the sphere; the tower of three origin blow-ups of the z-plane resolves the
// behaviour of F at p- (and, by the exact symmetry (w1, w2) -> (w1, -w2),
// at p+).

#include "crgeo/charts.hpp"
#include "crgeo/hypersurface.hpp"
#include "crgeo/poly.hpp"
#include "crgeo/projective.hpp"

namespace crgeo::construction {

inline const VarList& zvars() {
  static const VarList v{"z1", "z2"};
  return v;
}
inline const VarList& wvars() {
  static const VarList v{"w1", "w2"};
  return v;
}

// Chart ids of the three-step origin tower.
inline constexpr const char* kRoot = "U0";
inline constexpr const char* kU1p = "U1p";
inline constexpr const char* kU1pp = "U1pp";
inline constexpr const char* kU2p = "U2p";
inline constexpr const char* kU2pp = "U2pp";
inline constexpr const char* kU3p = "U3p";
inline constexpr const char* kU3pp = "U3pp";

HermPoly model_rho();    // |z1|^2 - Im z2, negative on the pseudoconvex side
HermPoly sphere_rho();   // |w1|^2 + |w2|^2 - 1

ExactPoint2 p_plus();    // (0,  1)
ExactPoint2 p_minus();   // (0, -1)

// z-plane building blocks.
ProjectiveTriple map_z();                                  // [z1^3 : z2^2 : z2]
std::pair<RationalExpr, RationalExpr> map_z_affine();      // (z1^3/z2, z2)

// w-plane map, computed by composition, and its hand-expanded form.
ProjectiveTriple map_w();
ProjectiveTriple map_w_literal();

// Target change xi = (zeta0, zeta1, zeta2 - i zeta1) taking the image line
// {zeta2 = i zeta1} to {xi2 = 0}, the resulting triple, and its affine form
// in the xi2-chart.
Mat3 line_change();
ProjectiveTriple map_final();          // compose_target(map_w(), line_change())
ProjectiveTriple map_final_literal();  // [w1^3 : -(1+w2)(1-w2^2) : 2i(1-w2^2)]
std::pair<RationalExpr, RationalExpr> map_affine_literal();
// The linear form zeta2 - i zeta1 evaluated on a triple's components.
HoloPoly line_form(const ProjectiveTriple& f);

// Source symmetry (w1, w2) -> (w1, -w2) exchanging p+ and p-, and the target
// change A with F o sigma = A o F.
std::pair<RationalExpr, RationalExpr> pm_swap_source();
Mat3 pm_swap_target();

// Tower of three origin blow-ups of the z-plane.
BlowupTower origin_tower();

// Companion cubic model in C^3: the image of M under (z1, z2) |->
// (z1^3/z2, z2, 0) lands in the cubic hypersurface K = {y3 + y2^3 = |u1 u2|^2}
// written here through its defining function in the Hermitian ring of
// (u1, u2, u3).
inline const VarList& uvars() {
  static const VarList v{"u1", "u2", "u3"};
  return v;
}
HermPoly cubic_model_k();

}  // namespace crgeo::construction
