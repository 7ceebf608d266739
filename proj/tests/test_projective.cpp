#include <doctest.h>

#include "crgeo/construction.hpp"
#include "crgeo/projective.hpp"

using namespace crgeo;
namespace cons = crgeo::construction;

namespace {

const VarList kZ{"z1", "z2"};
HoloPoly z(size_t i) { return HoloPoly::variable(kZ, i); }
HoloPoly constp(long v) { return HoloPoly::constant(kZ, ExactComplex(v)); }
HoloPoly w(size_t i) { return HoloPoly::variable(cons::wvars(), i); }

}  // namespace

TEST_CASE("projective points normalize") {
  ProjectivePoint p = ProjectivePoint::of(0, ExactComplex(2), ExactComplex::i(2));
  CHECK(p.h[0] == ExactComplex(0));
  CHECK(p.h[1] == ExactComplex(1));
  CHECK(p.h[2] == ExactComplex::i());
  CHECK(p == ProjectivePoint::of(0, ExactComplex(-4), ExactComplex::i(-4)));
  CHECK_THROWS_AS(ProjectivePoint::of(0, 0, 0), std::invalid_argument);
  CHECK(ProjectivePoint::of(0, 0, 1).str() == "[0/1+0/1i : 0/1+0/1i : 1/1+0/1i]");
}

TEST_CASE("matrix helpers") {
  Mat3 a = identity3();
  a[2][1] = ExactComplex::i(-1);
  Mat3 inv = inverse3(a);
  CHECK(matmul(a, inv) == identity3());
  CHECK(det3(a) == ExactComplex(1));

  Mat3 sing{};  // all zeros
  CHECK_THROWS_AS(inverse3(sing), std::invalid_argument);
}

TEST_CASE("triple normalization clears common monomials and given factors") {
  ProjectiveTriple t({z(0) * z(0) * z(1), z(0) * z(1) * z(1), z(0) * z(1)});
  CHECK(t.components()[0] == z(0));
  CHECK(t.components()[1] == z(1));
  CHECK(t.components()[2] == constp(1));

  // Supplied factor cleared as often as it divides all components.
  HoloPoly f = z(1) - constp(1);
  ProjectiveTriple s({f * f * z(0), f * f * z(1), f * f}, {f});
  CHECK(s.components()[0] == z(0));
  CHECK(s.cleared_factors().size() == 2);

  // A factor that does not divide everything is left alone.
  ProjectiveTriple u({f * z(0), z(1), constp(1)}, {f});
  CHECK(u.components()[0] == f * z(0));
  CHECK(u.cleared_factors().empty());
}

TEST_CASE("exact evaluation detects base points") {
  ProjectiveTriple t({z(0), z(1), z(0) + z(1)});
  auto at_base = t.eval({ExactComplex(0), ExactComplex(0)});
  CHECK(!at_base.has_value());
  auto p = t.eval({ExactComplex(1), ExactComplex(2)});
  REQUIRE(p.has_value());
  CHECK(*p == ProjectivePoint::of(1, 2, 3));
}

TEST_CASE("homogenize and dehomogenize are inverse up to equivalence") {
  RationalExpr f1(z(0) * z(0) * z(0), z(1));  // z1^3 / z2
  RationalExpr f2(z(1));
  ProjectiveTriple t = homogenize(f1, f2);
  CHECK(t == cons::map_z());
  auto [g1, g2] = dehomogenize(t, 2);
  CHECK(g1.equivalent(f1));
  CHECK(g2.equivalent(f2));
  CHECK_THROWS_AS(dehomogenize(ProjectiveTriple({z(0), z(1), HoloPoly::zero(kZ)}), 2),
                  std::invalid_argument);
}

TEST_CASE("compose_source on a hand-checked example") {
  // [z1 : z2 : 1] with (z1, z2) = (1/z2, z1): images [1/t : s : 1] ~ [1 : st : t].
  ProjectiveTriple f({z(0), z(1), constp(1)});
  ProjectiveTriple g = compose_source(f, RationalExpr(constp(1), z(1)), RationalExpr(z(0)));
  CHECK(g.components()[0] == constp(1));
  CHECK(g.components()[1] == z(0) * z(1));
  CHECK(g.components()[2] == z(1));
}

TEST_CASE("compose_target by an exact linear change") {
  ProjectiveTriple f({z(0), z(1), constp(1)});
  Mat3 a = identity3();
  a[2][1] = ExactComplex::i(-1);  // third row picks up -i * second component
  ProjectiveTriple g = compose_target(f, a);
  CHECK(g.components()[0] == z(0));
  CHECK(g.components()[1] == z(1));
  CHECK(g.components()[2] == constp(1) - ExactComplex::i() * z(1));
  CHECK_THROWS_AS(compose_target(f, Mat3{}), std::invalid_argument);
}

TEST_CASE("base locus: certified finite cases") {
  // No common zero at all.
  BaseLocus none = base_locus(ProjectiveTriple({z(0), z(1), constp(1)}));
  CHECK(none.points.empty());
  CHECK(none.certified_finite);

  // The z-model: single base point at the origin.
  BaseLocus bz = base_locus(cons::map_z());
  REQUIRE(bz.points.size() == 1);
  CHECK(bz.points[0] == ExactPoint2{ExactComplex(0), ExactComplex(0)});
  CHECK(bz.certified_finite);

  // The w-model: exactly the two sphere points.
  BaseLocus bw = base_locus(cons::map_w());
  REQUIRE(bw.points.size() == 2);
  CHECK(bw.points[0] == ExactPoint2{ExactComplex(0), ExactComplex(-1)});
  CHECK(bw.points[1] == ExactPoint2{ExactComplex(0), ExactComplex(1)});
  CHECK(bw.certified_finite);
}

TEST_CASE("base locus: irrational coordinates stay uncertified") {
  // Common zeros at z2 = 0, z1 = +-sqrt(2): not Gaussian-rational.
  ProjectiveTriple t({z(0) * z(0) - constp(2), z(1), z(1) * z(0)});
  BaseLocus b = base_locus(t);
  CHECK(b.points.empty());
  CHECK(!b.certified_finite);
  CHECK(!b.notes.empty());
}

TEST_CASE("pole divisor of both models") {
  PoleDivisor pz = pole_divisor(cons::map_z(), 2);
  CHECK(pz.divisor == z(1));

  PoleDivisor pw = pole_divisor(cons::map_w(), 2);
  HoloPoly onew = HoloPoly::constant(cons::wvars(), ExactComplex(1));
  CHECK(pw.divisor == ExactComplex::i() * ((onew + w(1)) * (onew - w(1)) * (onew - w(1))));
  // The (1 - w2)^3 cleared during composition is part of the provenance.
  CHECK(pw.cleared.size() == 3);
}

TEST_CASE("lift through the tower divides exceptional coordinates only") {
  BlowupTower t = cons::origin_tower();
  ProjectiveTriple l = lift(cons::map_z(), t, cons::kU1p);
  CHECK(l.components()[0] == z(0) * z(0));
  CHECK(l.components()[1] == z(0) * z(1) * z(1));
  CHECK(l.components()[2] == z(1));
  // Raw pullback [z1^3 : z1^2 z2^2 : z1 z2] divided by exactly one power of
  // the exceptional z1; z2 is not exceptional in U1p and must stay.
  CHECK(lift(cons::map_z(), t, cons::kRoot) == cons::map_z());
}

TEST_CASE("restriction and constancy") {
  BlowupTower t = cons::origin_tower();
  ProjectiveTriple l2p = lift(cons::map_z(), t, cons::kU2p);  // [z1 : z1^2 z2^2 : z2]
  ProjectiveTriple r = restrict_to_coordinate(l2p, 0);
  auto c = is_constant(r);
  CHECK(c.constant);
  CHECK(*c.value == ProjectivePoint::of(0, 0, 1));

  ProjectiveTriple l3p = lift(cons::map_z(), t, cons::kU3p);
  auto n = is_constant(restrict_to_coordinate(l3p, 0));
  CHECK(!n.constant);

  // [z2 : 2 z2 : 3 z2] is projectively constant after monomial clearing.
  auto k = is_constant(ProjectiveTriple({z(1), constp(2) * z(1), constp(3) * z(1)}));
  CHECK(k.constant);
  CHECK(*k.value == ProjectivePoint::of(1, 2, 3));

  // Two active variables are rejected.
  CHECK_THROWS_AS(is_constant(ProjectiveTriple({z(0), z(1), constp(1)})),
                  std::invalid_argument);
  // Identically vanishing restriction is rejected.
  CHECK_THROWS_AS(restrict_to_coordinate(ProjectiveTriple::raw({z(0), z(0) * z(1), z(0) * z(0)}),
                                         0),
                  std::domain_error);
}

TEST_CASE("chart distance") {
  ProjectivePoint target = ProjectivePoint::of(0, 0, 1);
  std::array<std::complex<double>, 3> close{{{1e-3, 0.0}, {0.0, -2e-3}, {1.0, 0.0}}};
  CHECK(chart_distance(close, target) == doctest::Approx(2e-3));
  std::array<std::complex<double>, 3> off{{{1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}}};
  CHECK(chart_distance(off, target) == std::numeric_limits<double>::infinity());
  // Scaling invariance.
  std::array<std::complex<double>, 3> scaled{{{2e-3, 0.0}, {0.0, -4e-3}, {2.0, 0.0}}};
  CHECK(chart_distance(scaled, target) == doctest::Approx(2e-3));
}
