#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace crgeo {

// Exact rational scalar. GMP keeps values canonical (reduced fraction,
// positive denominator) through all arithmetic.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
double to_double(const Rational& q);
std::string rational_str(const Rational& q);  // "num/den", den always present

// Complex number with exact rational real and imaginary parts: the scalar for
// all symbolic work. Arithmetic never rounds; the only lossy operation is the
// conversion to std::complex<double>.
class ExactComplex {
 public:
  ExactComplex() : re_(0), im_(0) {}
  ExactComplex(long v) : re_(v), im_(0) {}  // implicit: integers are scalars
  ExactComplex(Rational re) : re_(std::move(re)), im_(0) {}
  ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  // k * sqrt(-1)
  static ExactComplex i(long k = 1) { return ExactComplex(Rational(0), Rational(k)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactComplex conj() const { return ExactComplex(re_, -im_); }
  Rational norm2() const { return re_ * re_ + im_ * im_; }  // |z|^2, exact

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o);  // throws on division by zero

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return ExactComplex(-a.re_, -a.im_); }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }
  std::string str() const;  // "re_num/re_den(+|-)im_num/im_deni"

 private:
  Rational re_, im_;
};

ExactComplex pow(const ExactComplex& base, unsigned exp);

// Lexicographic (re, im) order, for deterministic sorting of point sets.
bool exact_less(const ExactComplex& a, const ExactComplex& b);

}  // namespace crgeo
