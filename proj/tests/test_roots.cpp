#include <doctest.h>

#include <cmath>

#include "crgeo/roots.hpp"

using namespace crgeo;

namespace {

const VarList kZ{"z1", "z2"};
HoloPoly z(size_t i) { return HoloPoly::variable(kZ, i); }
HoloPoly constp(long v) { return HoloPoly::constant(kZ, ExactComplex(v)); }

}  // namespace

TEST_CASE("rationalize recovers small fractions") {
  CHECK(*rationalize(0.5, 1000) == make_rational(1, 2));
  CHECK(*rationalize(1.0 / 3.0, 1000) == make_rational(1, 3));
  CHECK(*rationalize(-22.0 / 7.0, 1000) == make_rational(-22, 7));
  CHECK(!rationalize(std::nan(""), 1000).has_value());
  CHECK(!rationalize(1e30, 1000000).has_value());
}

TEST_CASE("durand-kerner approximates roots") {
  // (x - 1)(x - 2)(x - 3) = -6 + 11x - 6x^2 + x^3.
  auto roots = durand_kerner({{-6, 0}, {11, 0}, {-6, 0}, {1, 0}});
  REQUIRE(roots.size() == 3);
  double found[3] = {0, 0, 0};
  for (const auto& r : roots)
    for (int k = 1; k <= 3; ++k)
      if (std::abs(r - std::complex<double>(k, 0)) < 1e-8) found[k - 1] += 1;
  CHECK(found[0] == 1);
  CHECK(found[1] == 1);
  CHECK(found[2] == 1);
}

TEST_CASE("exact roots of a splitting polynomial with multiplicities") {
  // (z2 - 1)^2 (z2 + i) (z2 - 3/2).
  HoloPoly one = constp(1);
  HoloPoly p = (z(1) - one) * (z(1) - one) * (z(1) + HoloPoly::constant(kZ, ExactComplex::i())) *
               (z(1) - HoloPoly::constant(kZ, ExactComplex(make_rational(3, 2))));
  auto r = exact_roots(p, 1);
  CHECK(r.complete);
  CHECK(r.unresolved.empty());
  REQUIRE(r.exact.size() == 3);
  CHECK(r.has_root(ExactComplex(1)));
  CHECK(r.has_root(ExactComplex::i(-1)));
  CHECK(r.has_root(ExactComplex(make_rational(3, 2))));
  for (const auto& [root, mult] : r.exact)
    CHECK(mult == (root == ExactComplex(1) ? 2u : 1u));
}

TEST_CASE("origin roots are stripped exactly") {
  HoloPoly p = pow(z(0), 3) * (z(0) - constp(2));
  auto r = exact_roots(p, 0);
  CHECK(r.complete);
  REQUIRE(r.exact.size() == 2);
  CHECK(r.exact[0].first == ExactComplex(0));
  CHECK(r.exact[0].second == 3);
  CHECK(r.has_root(ExactComplex(2)));
}

TEST_CASE("irrational roots are reported as unresolved, never faked") {
  HoloPoly p = z(0) * z(0) - constp(2);
  auto r = exact_roots(p, 0);
  CHECK(!r.complete);
  CHECK(r.exact.empty());
  REQUIRE(r.unresolved.size() == 2);
  for (const auto& u : r.unresolved)
    CHECK(std::abs(std::abs(u.real()) - std::sqrt(2.0)) < 1e-9);

  // Mixed case: one rational root deflates out, the irrational pair remains.
  HoloPoly q = (z(0) - constp(1)) * (z(0) * z(0) - constp(2));
  auto r2 = exact_roots(q, 0);
  CHECK(!r2.complete);
  REQUIRE(r2.exact.size() == 1);
  CHECK(r2.exact[0].first == ExactComplex(1));
  CHECK(r2.unresolved.size() == 2);
}

TEST_CASE("gaussian-rational roots with awkward denominators") {
  // (z1 - (2/7)i) (z1 + 5/3).
  HoloPoly p = (z(0) - HoloPoly::constant(kZ, ExactComplex(Rational(0), make_rational(2, 7)))) *
               (z(0) + HoloPoly::constant(kZ, ExactComplex(make_rational(5, 3))));
  auto r = exact_roots(p, 0);
  CHECK(r.complete);
  CHECK(r.has_root(ExactComplex(Rational(0), make_rational(2, 7))));
  CHECK(r.has_root(ExactComplex(make_rational(-5, 3))));
}

TEST_CASE("multivariate input is rejected") {
  CHECK_THROWS_AS(exact_roots(z(0) * z(1), 0), std::invalid_argument);
}

TEST_CASE("deterministic ordering of reported roots") {
  HoloPoly p = (z(0) - constp(2)) * (z(0) + constp(1)) * (z(0) - ExactComplex::i() * constp(1));
  auto r = exact_roots(p, 0);
  REQUIRE(r.exact.size() == 3);
  for (size_t k = 0; k + 1 < r.exact.size(); ++k)
    CHECK(exact_less(r.exact[k].first, r.exact[k + 1].first));
}
