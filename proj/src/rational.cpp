#include "crgeo/rational.hpp"

#include <stdexcept>

namespace crgeo {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

std::string rational_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
  if (o.is_zero()) throw std::domain_error("ExactComplex: division by zero");
  Rational n2 = o.norm2();
  Rational r = (re_ * o.re_ + im_ * o.im_) / n2;
  Rational i = (im_ * o.re_ - re_ * o.im_) / n2;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string ExactComplex::str() const {
  std::string s = rational_str(re_);
  if (sgn(im_) < 0) {
    s += "-" + rational_str(-im_);
  } else {
    s += "+" + rational_str(im_);
  }
  s += "i";
  return s;
}

ExactComplex pow(const ExactComplex& base, unsigned exp) {
  ExactComplex out(1);
  for (unsigned k = 0; k < exp; ++k) out *= base;
  return out;
}

bool exact_less(const ExactComplex& a, const ExactComplex& b) {
  int c = cmp(a.re(), b.re());
  if (c != 0) return c < 0;
  return cmp(a.im(), b.im()) < 0;
}

}  // namespace crgeo
