#include <doctest.h>

#include <cmath>

#include "crgeo/construction.hpp"
#include "crgeo/hypersurface.hpp"

using namespace crgeo;
namespace cons = crgeo::construction;

namespace {

const VarList kZ{"z1", "z2"};
HoloPoly z(size_t i) { return HoloPoly::variable(kZ, i); }

}  // namespace

TEST_CASE("hypersurfaces require real defining functions") {
  CHECK_NOTHROW(RealHypersurface(cons::model_rho(), cons::kRoot));
  CHECK_THROWS_AS(RealHypersurface(herm(z(0)), cons::kRoot), std::invalid_argument);
}

TEST_CASE("exact gradient and Levi form of the model quadric") {
  HermPoly rho = cons::model_rho();
  // At the origin: d rho = (0, i/2); normalized Levi form 1.
  auto g0 = gradient(rho, {ExactComplex(0), ExactComplex(0)});
  CHECK(g0[0] == ExactComplex(0));
  CHECK(g0[1] == ExactComplex(Rational(0), make_rational(1, 2)));
  CHECK(levi_form_exact(rho, {ExactComplex(0), ExactComplex(0)}) == Rational(1));

  // At (1, i) on the quadric: v = (-i/2, 1), Levi = (1/4) / (5/4) = 1/5.
  CHECK(rho.eval({ExactComplex(1), ExactComplex::i()}).is_zero());
  CHECK(levi_form_exact(rho, {ExactComplex(1), ExactComplex::i()}) == make_rational(1, 5));
}

TEST_CASE("sphere has constant normalized Levi form one") {
  HermPoly rho = cons::sphere_rho();
  CHECK(levi_form_exact(rho, {ExactComplex(1), ExactComplex(0)}) == Rational(1));
  CHECK(levi_form_exact(rho, {ExactComplex(0), ExactComplex(-1)}) == Rational(1));
  CHECK(levi_form_exact(rho, {ExactComplex(make_rational(3, 5)), ExactComplex(make_rational(4, 5))}) ==
        Rational(1));
}

TEST_CASE("levi form requires a smooth point") {
  HermPoly quartic = pow(modulus_squared(z(0)), 2) - modulus_squared(z(1));
  CHECK_THROWS_AS(levi_form_exact(quartic, {ExactComplex(0), ExactComplex(0)}),
                  std::domain_error);
}

TEST_CASE("proper transform through the tower: totals and denominators") {
  BlowupTower tower = cons::origin_tower();
  RealHypersurface m(cons::model_rho(), cons::kRoot);

  auto u1p = proper_transform(m, tower, cons::kU1p);
  CHECK(u1p.total.rho == modulus_squared(z(0)) - im_part(z(0) * z(1)));
  CHECK(u1p.reduced.expr.den == modulus_squared(z(0)));
  CHECK(u1p.reduced.expr.num == tower.pullback(cons::kU1p, cons::model_rho()));
  CHECK(u1p.reduced.locus == z(0));

  auto u1pp = proper_transform(m, tower, cons::kU1pp);
  CHECK(u1pp.total.rho == modulus_squared(z(0) * z(1)) - im_part(z(1)));
  CHECK(u1pp.reduced.expr.den == modulus_squared(z(1)));

  auto u2p = proper_transform(m, tower, cons::kU2p);
  CHECK(u2p.total.rho == modulus_squared(z(0)) - im_part(z(0) * z(0) * z(1)));
  CHECK(u2p.reduced.expr.den == modulus_squared(z(0)));

  auto u2pp = proper_transform(m, tower, cons::kU2pp);
  CHECK(u2pp.total.rho ==
        modulus_squared(z(0) * z(1)) - im_part(z(0) * z(1) * z(1)));
  CHECK(u2pp.reduced.expr.den == modulus_squared(z(0)) * modulus_squared(z(1)));
  CHECK(u2pp.reduced.locus == z(0) * z(1));

  // The reduced expression literally times its denominator gives the raw
  // pullback; the polynomial part of the transform never loses factors that
  // are not powers of |e|^2.
  CHECK(u2pp.reduced.expr.num == tower.pullback(cons::kU2pp, cons::model_rho()));
}

TEST_CASE("transform of a hypersurface already divisible by the exceptional modulus") {
  BlowupTower tower = cons::origin_tower();
  // |z1|^2 |z2|^2 - |z1|^4: every term divisible by |z1|^2.
  HermPoly rho = modulus_squared(z(0)) * modulus_squared(z(1)) -
                 pow(modulus_squared(z(0)), 2);
  RealHypersurface h(rho, cons::kRoot);
  auto r = proper_transform(h, tower, cons::kU1p);
  // Pullback = |z1|^4 |z2|^2 - |z1|^4 = |z1|^4 (|z2|^2 - 1): the |z1|^4
  // divides out polynomially.
  CHECK(r.total.rho == modulus_squared(z(1)) - HermPoly::constant(kZ, ExactComplex(1)));
}

TEST_CASE("cayley substitution carries the sphere to the quadric") {
  auto [r1, r2] = cayley_substitution(cons::wvars());
  HoloPoly onew = HoloPoly::constant(cons::wvars(), ExactComplex(1));
  HoloPoly w1 = HoloPoly::variable(cons::wvars(), size_t(0));
  HoloPoly w2 = HoloPoly::variable(cons::wvars(), size_t(1));
  // Canonical representative: the denominator is made monic, so the stored
  // fraction is (-w1)/(w2 - 1), equivalent to w1/(1 - w2).
  CHECK(r1.num() == -w1);
  CHECK(r1.den() == w2 - onew);
  CHECK(r1.equivalent(RationalExpr(w1, onew - w2)));
  CHECK(r2.equivalent(RationalExpr(ExactComplex::i() * (onew + w2), onew - w2)));

  CHECK(cayley_point({ExactComplex(0), ExactComplex(-1)}) ==
        ExactPoint2{ExactComplex(0), ExactComplex(0)});
  CHECK(cayley_point({ExactComplex(1), ExactComplex(0)}) ==
        ExactPoint2{ExactComplex(1), ExactComplex::i()});
  CHECK_THROWS_AS(cayley_point({ExactComplex(0), ExactComplex(1)}), std::domain_error);

  CayleyPullback pb = cayley_pullback(cons::model_rho());
  CHECK(pb.degree_hol == 1);
  CHECK(pb.degree_anti == 1);
  CHECK(pb.cleared == cons::sphere_rho());
}

TEST_CASE("trace grid geometry") {
  TraceGrid g;
  g.pitch = 0.5;
  g.half_extent = 1.0;
  g.n = 5;
  CHECK(g.site(0, 0) == std::complex<double>(-1.0, -1.0));
  CHECK(g.site(4, 2) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("trace of the transformed quadric on the second exceptional curve") {
  BlowupTower tower = cons::origin_tower();
  RealHypersurface m(cons::model_rho(), cons::kRoot);
  auto u2p = proper_transform(m, tower, cons::kU2p);

  TraceOptions opt;
  opt.pitch = 0.05;
  opt.window = 2.0;
  opt.phases = 72;
  opt.mode = ExecMode::serial;
  ExceptionalTrace tr = exceptional_trace(u2p.reduced.expr, 0, opt);

  // The limit values on the phase circle are sin-like with mean |c|^2 and
  // first-harmonic amplitude |c|: solvable exactly when |c| >= ... = 1.
  CHECK(tr.analysis.closed_form);
  CHECK(std::abs(tr.analysis.threshold - 1.0) < 5e-2);
  CHECK(tr.stabilization_drift < 1e-3);

  auto at = [&](double x, double y) {
    auto ix = static_cast<std::size_t>(std::lround((x + opt.window) / opt.pitch));
    auto iy = static_cast<std::size_t>(std::lround((y + opt.window) / opt.pitch));
    return tr.grid.detected[ix * tr.grid.n + iy] != 0;
  };
  CHECK(at(1.5, 0.0));
  CHECK(at(0.0, -1.25));
  CHECK(!at(0.25, 0.0));
  CHECK(!at(0.0, 0.5));

  double h = hausdorff_to_annulus(tr.grid, 1.0, opt.window);
  CHECK(h <= 2e-2);
}

TEST_CASE("hausdorff distance against synthetic grids") {
  TraceGrid g;
  g.pitch = 0.1;
  g.half_extent = 2.0;
  g.n = 41;
  g.detected.assign(g.n * g.n, 0);
  for (std::size_t ix = 0; ix < g.n; ++ix)
    for (std::size_t iy = 0; iy < g.n; ++iy) {
      double r = std::abs(g.site(ix, iy));
      if (r >= 1.0 && r <= 2.0) g.detected[ix * g.n + iy] = 1;
    }
  CHECK(hausdorff_to_annulus(g, 1.0, 2.0) <= 0.08);

  // Detected set too small: the annulus point (0, 1.9) is far from it.
  TraceGrid s = g;
  s.detected.assign(s.n * s.n, 0);
  for (std::size_t ix = 0; ix < s.n; ++ix)
    for (std::size_t iy = 0; iy < s.n; ++iy) {
      double r = std::abs(s.site(ix, iy));
      if (r >= 1.0 && r <= 1.2) s.detected[ix * s.n + iy] = 1;
    }
  CHECK(hausdorff_to_annulus(s, 1.0, 2.0) > 0.5);

  // Nothing detected at all: infinite distance.
  TraceGrid e = g;
  e.detected.assign(e.n * e.n, 0);
  CHECK(hausdorff_to_annulus(e, 1.0, 2.0) == std::numeric_limits<double>::infinity());
}
