#include <doctest.h>

#include "crgeo/poly.hpp"
#include "crgeo/rng.hpp"

using namespace crgeo;

namespace {

const VarList kZ{"z1", "z2"};

HoloPoly z(size_t i) { return HoloPoly::variable(kZ, i); }
HoloPoly constp(long v) { return HoloPoly::constant(kZ, ExactComplex(v)); }

HoloPoly random_poly(SplitMix64& rng, int max_terms = 5, unsigned max_exp = 3) {
  HoloPoly p(kZ);
  int nt = 1 + static_cast<int>(rng.next() % max_terms);
  for (int t = 0; t < nt; ++t) {
    Exps e{static_cast<unsigned>(rng.next() % (max_exp + 1)),
           static_cast<unsigned>(rng.next() % (max_exp + 1))};
    long re = static_cast<long>(rng.next() % 11) - 5;
    long im = static_cast<long>(rng.next() % 11) - 5;
    p.add_term(e, ExactComplex(Rational(re), Rational(im)));
  }
  return p;
}

std::vector<ExactComplex> random_point(SplitMix64& rng) {
  auto scalar = [&] {
    return ExactComplex(make_rational(static_cast<long>(rng.next() % 9) - 4, 3),
                        make_rational(static_cast<long>(rng.next() % 9) - 4, 2));
  };
  return {scalar(), scalar()};
}

}  // namespace

TEST_CASE("construction and canonical form") {
  HoloPoly p = z(0) * z(0) - z(1);
  CHECK(p.degree() == 2);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.coeff({2, 0}) == ExactComplex(1));
  CHECK(p.coeff({0, 1}) == ExactComplex(-1));
  CHECK(p.coeff({1, 1}) == ExactComplex(0));
  CHECK((p - p).is_zero());
  CHECK(HoloPoly::zero(kZ).degree() == -1);
  CHECK(p.str() == "(1/1+0/1i)*z1^2 + (-1/1+0/1i)*z2^1");
}

TEST_CASE("mismatched variable lists are rejected with both lists named") {
  HoloPoly a = HoloPoly::variable({"z1", "z2"}, size_t(0));
  HoloPoly b = HoloPoly::variable({"w1", "w2"}, size_t(0));
  bool threw = false;
  try {
    HoloPoly c = a + b;
  } catch (const std::invalid_argument& e) {
    threw = true;
    std::string msg = e.what();
    CHECK(msg.find("z1") != std::string::npos);
    CHECK(msg.find("w1") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("ring identities on random polynomials") {
  SplitMix64 rng(7);
  for (int k = 0; k < 60; ++k) {
    HoloPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("evaluation and substitution are ring homomorphisms") {
  SplitMix64 rng(11);
  for (int k = 0; k < 40; ++k) {
    HoloPoly a = random_poly(rng), b = random_poly(rng);
    auto pt = random_point(rng);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));

    std::vector<HoloPoly> images{z(1) * z(1), z(0) + constp(1)};
    CHECK((a * b).substitute(images) == a.substitute(images) * b.substitute(images));
    CHECK((a + b).substitute(images) == a.substitute(images) + b.substitute(images));
  }
}

TEST_CASE("named substitution requires complete bindings") {
  HoloPoly p = z(0) * z(1);
  std::map<std::string, HoloPoly> partial{{"z1", z(1)}};
  CHECK_THROWS_AS(p.substitute(partial), std::invalid_argument);
  std::map<std::string, HoloPoly> full{{"z1", z(1)}, {"z2", z(0)}};
  CHECK(p.substitute(full) == z(0) * z(1));
}

TEST_CASE("derivative satisfies the product rule") {
  SplitMix64 rng(13);
  for (int k = 0; k < 40; ++k) {
    HoloPoly a = random_poly(rng), b = random_poly(rng);
    for (size_t v = 0; v < 2; ++v)
      CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
  }
}

TEST_CASE("monomial factoring and division") {
  HoloPoly p = z(0) * z(0) * z(1) + z(0) * z(1) * z(1);
  auto [m, q] = p.factor_out_monomial();
  CHECK(m == Exps{1, 1});
  CHECK(q == z(0) + z(1));
  CHECK(p.divide_monomial(m) == q);
  CHECK_THROWS_AS((z(0) + constp(1)).divide_monomial(Exps{1, 0}), std::domain_error);
}

TEST_CASE("exact division") {
  SplitMix64 rng(17);
  for (int k = 0; k < 40; ++k) {
    HoloPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    CHECK((a * b).divide_exact(b) == a);
  }
  CHECK(!(z(0) + constp(1)).try_divide(z(1)).has_value());
  CHECK_THROWS_AS((z(0) + constp(1)).divide_exact(z(1)), std::domain_error);
}

TEST_CASE("coefficient extraction reassembles the polynomial") {
  HoloPoly p = z(0) * z(0) * z(1) - constp(3) * z(0) + z(1) * z(1);
  auto cs = p.coeffs_in(0);
  HoloPoly back(kZ);
  for (size_t k = 0; k < cs.size(); ++k) back += cs[k] * pow(z(0), static_cast<unsigned>(k));
  CHECK(back == p);
  for (const auto& c : cs) CHECK(c.degree_in(0) <= 0);
}

TEST_CASE("sylvester resultant") {
  // res_x(x^2 - y, x - y) = y^2 - y: zero exactly at the two intersection
  // heights y = 0 and y = 1.
  HoloPoly p = z(0) * z(0) - z(1);
  HoloPoly q = z(0) - z(1);
  HoloPoly r = resultant(p, q, 0);
  CHECK(r == z(1) * z(1) - z(1));

  // Coprime pair: nonzero constant resultant.
  HoloPoly r2 = resultant(z(0), z(0) - constp(1), 0);
  CHECK(r2.is_constant());
  CHECK(r2.constant_value() != ExactComplex(0));

  // Degree-zero convention: the constant argument is raised to the degree of
  // the other one.
  CHECK(resultant(z(1), z(0) * z(0) - constp(2), 0) == z(1) * z(1));
  CHECK_THROWS_AS(resultant(z(1), z(1) + constp(1), 0), std::invalid_argument);
}

TEST_CASE("hermitian polynomials: reality and conjugation") {
  HermPoly rho = modulus_squared(z(0)) - im_part(z(1));
  CHECK(rho.is_real_symmetric());
  CHECK(rho.conj() == rho);
  CHECK(!herm(z(0)).is_real_symmetric());
  CHECK(herm(z(0)).conj() == herm_conj(z(0)));

  SplitMix64 rng(19);
  for (int k = 0; k < 30; ++k) {
    HoloPoly p = random_poly(rng);
    CHECK(modulus_squared(p) == herm(p) * herm_conj(p));
    CHECK(re_part(p) + ExactComplex::i() * im_part(p) == herm(p));
    CHECK(re_part(p).is_real_symmetric());
    CHECK(im_part(p).is_real_symmetric());

    auto pt = random_point(rng);
    CHECK(herm_conj(p).eval(pt) == herm(p).eval(pt).conj());
    CHECK(modulus_squared(p).eval(pt) == ExactComplex(p.eval(pt).norm2()));
  }
}

TEST_CASE("hermitian evaluation uses conjugated values for ~z") {
  HermPoly m = modulus_squared(z(0));
  ExactComplex v(make_rational(3, 5), make_rational(4, 5));
  CHECK(m.eval({v, ExactComplex(0)}) == ExactComplex(v.norm2()));
  CHECK(m.eval({v, ExactComplex(0)}).is_real());
}

TEST_CASE("wirtinger derivatives") {
  HermPoly m = modulus_squared(z(0));  // z1 ~z1
  CHECK(m.d_z(0) == herm_conj(z(0)));
  CHECK(m.d_zbar(0) == herm(z(0)));
  CHECK(m.d_z(1).is_zero());

  // Im z2 = (z2 - ~z2) / (2i): d/dz2 = 1/(2i) = -i/2.
  HermPoly im = im_part(z(1));
  CHECK(im.d_z(1) == HermPoly::constant(kZ, ExactComplex(Rational(0), make_rational(-1, 2))));

  SplitMix64 rng(23);
  for (int k = 0; k < 20; ++k) {
    HoloPoly p = random_poly(rng);
    // Holomorphic functions are killed by d_zbar.
    CHECK(herm(p).d_zbar(0).is_zero());
    CHECK(herm(p).d_zbar(1).is_zero());
    // Conjugate symmetry of the two derivatives on real polynomials.
    HermPoly r = modulus_squared(p);
    CHECK(r.d_z(0).conj() == r.d_zbar(0));
  }
}

TEST_CASE("hermitian substitution respects conjugation") {
  HermPoly m = modulus_squared(z(0)) - im_part(z(1));
  // z1 -> z1 z2, z2 -> z2 (the secondary blow-up substitution, by hand).
  HermPoly sub = m.substitute({herm(z(0) * z(1)), herm(z(1))});
  CHECK(sub == modulus_squared(z(0) * z(1)) - im_part(z(1)));
}

TEST_CASE("modulus powers") {
  // |z1|^4 * (z1 + ~z1): reduction power differs from divisible power.
  HermPoly p = pow(modulus_squared(z(0)), 2) * (herm(z(0)) + herm_conj(z(0)));
  CHECK(p.modulus_divisible_power(0) == 2);
  CHECK(p.modulus_reduction_power(0) == 3);
  CHECK(p.modulus_reduction_power(1) == 0);
}

TEST_CASE("rational expressions normalize") {
  // Common monomial cleared.
  RationalExpr r(z(0) * z(0) * z(1), z(0) * z(1) * z(1));
  CHECK(r.num() == z(0));
  CHECK(r.den() == z(1));

  // Denominator leading coefficient scaled to one.
  RationalExpr s(z(0), constp(2) * z(1));
  CHECK(s.den() == z(1));
  CHECK(s.num() == z(0) * ExactComplex(make_rational(1, 2)));

  CHECK_THROWS_AS(RationalExpr(z(0), HoloPoly::zero(kZ)), std::invalid_argument);

  RationalExpr zero(HoloPoly::zero(kZ), z(1));
  CHECK(zero.is_zero());
  CHECK(zero.den() == constp(1));
}

TEST_CASE("rational expression arithmetic and equivalence") {
  RationalExpr a(z(0), z(1));              // z1 / z2
  RationalExpr b(z(0) * z(0), z(0) * z(1));  // same function
  CHECK(a.equivalent(b));
  CHECK(!a.equivalent(RationalExpr(z(1), z(0))));

  RationalExpr sum = a + a;
  CHECK(sum.equivalent(RationalExpr(constp(2) * z(0), z(1))));
  RationalExpr prod = a * RationalExpr(z(1));
  CHECK(prod.equivalent(RationalExpr(z(0))));

  // Quotient rule: d/dz2 (z1 / z2) = -z1 / z2^2.
  RationalExpr d = a.derivative(1);
  CHECK(d.equivalent(RationalExpr(-z(0), z(1) * z(1))));

  CHECK(a.eval({ExactComplex(3), ExactComplex(2)}) ==
        ExactComplex(make_rational(3, 2)));
  CHECK_THROWS_AS(a.eval({ExactComplex(1), ExactComplex(0)}), std::domain_error);
}
