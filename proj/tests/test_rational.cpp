#include <doctest.h>

#include "crgeo/rational.hpp"
#include "crgeo/rng.hpp"

using namespace crgeo;

namespace {

ExactComplex random_scalar(SplitMix64& rng) {
  auto part = [&] {
    long num = static_cast<long>(rng.next() % 19) - 9;
    long den = static_cast<long>(rng.next() % 7) + 1;
    return make_rational(num, den);
  };
  return ExactComplex(part(), part());
}

}  // namespace

TEST_CASE("rational arithmetic is exact where doubles are not") {
  Rational third = make_rational(1, 3);
  Rational sixth = make_rational(1, 6);
  CHECK(third + sixth == make_rational(1, 2));
  CHECK(make_rational(2, 4) == make_rational(1, 2));  // canonicalized
  CHECK(rational_str(make_rational(-2, 4)) == "-1/2");
}

TEST_CASE("complex scalar arithmetic") {
  ExactComplex a(make_rational(1, 2), make_rational(-1, 3));
  ExactComplex b(make_rational(2, 5), make_rational(1, 7));

  CHECK((a + b) - b == a);
  CHECK(a * b == b * a);
  CHECK((a / b) * b == a);
  CHECK(a.conj().conj() == a);
  CHECK(a * a.conj() == ExactComplex(a.norm2()));
  CHECK(ExactComplex::i() * ExactComplex::i() == ExactComplex(-1));
  CHECK(pow(ExactComplex::i(), 4) == ExactComplex(1));
  CHECK_THROWS_AS(a / ExactComplex(0), std::domain_error);
}

TEST_CASE("field identities on random scalars") {
  SplitMix64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    ExactComplex a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + (-a) == ExactComplex(0));
    if (!a.is_zero()) CHECK(a / a == ExactComplex(1));
  }
}

TEST_CASE("string form and ordering") {
  CHECK(ExactComplex(make_rational(1, 2), make_rational(-3, 4)).str() == "1/2-3/4i");
  CHECK(ExactComplex(1).str() == "1/1+0/1i");
  CHECK(exact_less(ExactComplex(0), ExactComplex(1)));
  CHECK(exact_less(ExactComplex(Rational(1), Rational(-1)), ExactComplex(Rational(1), Rational(2))));
  CHECK(!exact_less(ExactComplex(1), ExactComplex(1)));
}

TEST_CASE("conversion to floating point") {
  ExactComplex a(make_rational(1, 4), make_rational(-1, 8));
  auto z = a.to_complex();
  CHECK(z.real() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(z.imag() == doctest::Approx(-0.125).epsilon(1e-15));
}
