#include "crgeo/construction.hpp"

namespace crgeo::construction {

namespace {

HoloPoly zv(size_t i) { return HoloPoly::variable(zvars(), i); }
HoloPoly wv(size_t i) { return HoloPoly::variable(wvars(), i); }
HoloPoly wone() { return HoloPoly::constant(wvars(), ExactComplex(1)); }

}  // namespace

HermPoly model_rho() { return modulus_squared(zv(0)) - im_part(zv(1)); }

HermPoly sphere_rho() {
  return modulus_squared(wv(0)) + modulus_squared(wv(1)) -
         HermPoly::constant(wvars(), ExactComplex(1));
}

ExactPoint2 p_plus() { return {ExactComplex(0), ExactComplex(1)}; }
ExactPoint2 p_minus() { return {ExactComplex(0), ExactComplex(-1)}; }

ProjectiveTriple map_z() {
  return ProjectiveTriple({pow(zv(0), 3), pow(zv(1), 2), zv(1)});
}

std::pair<RationalExpr, RationalExpr> map_z_affine() {
  return {RationalExpr(pow(zv(0), 3), zv(1)), RationalExpr(zv(1))};
}

ProjectiveTriple map_w() {
  auto [r1, r2] = cayley_substitution(wvars());
  return compose_source(map_z(), r1, r2);
}

ProjectiveTriple map_w_literal() {
  HoloPoly one = wone(), w1 = wv(0), w2 = wv(1);
  HoloPoly c0 = pow(w1, 3);
  HoloPoly c1 = -(pow(one + w2, 2) * (one - w2));
  HoloPoly c2 = ExactComplex::i() * ((one + w2) * pow(one - w2, 2));
  return ProjectiveTriple::raw({c0, c1, c2});
}

Mat3 line_change() {
  Mat3 a = identity3();
  a[2][1] = ExactComplex::i(-1);  // xi2 = zeta2 - i zeta1
  return a;
}

ProjectiveTriple map_final() { return compose_target(map_w(), line_change()); }

ProjectiveTriple map_final_literal() {
  HoloPoly one = wone(), w1 = wv(0), w2 = wv(1);
  HoloPoly disc = one - w2 * w2;  // 1 - w2^2
  HoloPoly c0 = pow(w1, 3);
  HoloPoly c1 = -((one + w2) * disc);
  HoloPoly c2 = ExactComplex(Rational(0), Rational(2)) * disc;  // 2i (1 - w2^2)
  return ProjectiveTriple::raw({c0, c1, c2});
}

std::pair<RationalExpr, RationalExpr> map_affine_literal() {
  HoloPoly one = wone(), w1 = wv(0), w2 = wv(1);
  HoloPoly disc = one - w2 * w2;
  // (-i/2) w1^3 / (1 - w2^2) and (i/2)(1 + w2).
  RationalExpr f1(ExactComplex(Rational(0), make_rational(-1, 2)) * pow(w1, 3), disc);
  RationalExpr f2(ExactComplex(Rational(0), make_rational(1, 2)) * (one + w2));
  return {f1, f2};
}

HoloPoly line_form(const ProjectiveTriple& f) {
  return f.components()[2] - ExactComplex::i() * f.components()[1];
}

std::pair<RationalExpr, RationalExpr> pm_swap_source() {
  return {RationalExpr(wv(0)), RationalExpr(-wv(1))};
}

Mat3 pm_swap_target() {
  Mat3 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = ExactComplex(0);
  a[0][0] = ExactComplex(1);
  a[1][2] = ExactComplex::i();
  a[2][1] = ExactComplex::i(-1);
  return a;
}

BlowupTower origin_tower() {
  BlowupTower t = BlowupTower::plane(kRoot, zvars());
  ExactPoint2 origin{ExactComplex(0), ExactComplex(0)};
  auto [u1p, u1pp] = t.blow_up(kRoot, origin);
  auto [u2p, u2pp] = t.blow_up(u1p, origin);
  t.blow_up(u2p, origin);
  return t;
}

HermPoly cubic_model_k() {
  HoloPoly u1 = HoloPoly::variable(uvars(), size_t(0));
  HoloPoly u2 = HoloPoly::variable(uvars(), size_t(1));
  HoloPoly u3 = HoloPoly::variable(uvars(), size_t(2));
  return im_part(u3) + pow(im_part(u2), 3) - modulus_squared(u1 * u2);
}

}  // namespace crgeo::construction
