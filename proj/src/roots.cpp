#include "crgeo/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crgeo {

std::optional<Rational> rationalize(double x, unsigned long max_den) {
  if (!std::isfinite(x) || std::abs(x) > 1e12) return std::nullopt;
  bool neg = x < 0;
  double v = std::abs(x);
  // Continued-fraction convergents p/q of v until the denominator cap.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 1e15) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 < 0 || static_cast<unsigned long>(q2) > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  Rational q = make_rational(neg ? -p1 : p1, q1);
  return q;
}

std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> coeffs) {
  size_t d = coeffs.size() - 1;
  if (coeffs.empty() || std::abs(coeffs[d]) == 0.0)
    throw std::invalid_argument("durand_kerner: zero leading coefficient");
  if (d == 0) return {};
  // Monic form.
  for (size_t k = 0; k < d; ++k) coeffs[k] /= coeffs[d];
  coeffs[d] = 1.0;

  double bound = 1.0;
  for (size_t k = 0; k < d; ++k) bound = std::max(bound, std::abs(coeffs[k]));
  bound = 1.0 + bound;

  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (size_t k = d + 1; k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
  };

  std::vector<std::complex<double>> r(d);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> t = 1.0;
  for (size_t k = 0; k < d; ++k) {
    t *= seed;
    r[k] = bound * t;
  }
  for (int it = 0; it < 500; ++it) {
    double shift = 0.0;
    for (size_t k = 0; k < d; ++k) {
      std::complex<double> den = 1.0;
      for (size_t j = 0; j < d; ++j)
        if (j != k) den *= (r[k] - r[j]);
      if (std::abs(den) == 0.0) den = 1e-30;
      std::complex<double> delta = eval(r[k]) / den;
      r[k] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  return r;
}

namespace {

// Synthetic division of ascending coefficients by (x - r); returns the
// quotient when the remainder is exactly zero.
std::optional<std::vector<ExactComplex>> deflate(const std::vector<ExactComplex>& c,
                                                 const ExactComplex& r) {
  size_t d = c.size() - 1;
  std::vector<ExactComplex> q(d);
  ExactComplex carry = c[d];
  for (size_t k = d; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + r * carry;
  }
  if (!carry.is_zero()) return std::nullopt;
  return q;
}

void push_candidates(double x, std::vector<Rational>& out) {
  if (std::abs(x) < 1e-9) {
    out.push_back(Rational(0));
    return;
  }
  for (unsigned long cap : {1ul, 8ul, 64ul, 1024ul, 1000000ul}) {
    auto q = rationalize(x, cap);
    if (q && std::abs(to_double(*q) - x) < 0.5) out.push_back(*q);
  }
}

}  // namespace

UniRootResult exact_roots(const HoloPoly& p, size_t var) {
  for (size_t i = 0; i < p.nvars(); ++i) {
    if (i != var && p.degree_in(i) > 0)
      throw std::invalid_argument("exact_roots: polynomial is not univariate in " +
                                  p.vars()[var]);
  }
  if (p.is_zero()) throw std::invalid_argument("exact_roots: zero polynomial");

  UniRootResult res;
  int deg = p.degree_in(var);
  std::vector<ExactComplex> c(static_cast<size_t>(deg) + 1, ExactComplex(0));
  for (const auto& [e, k] : p.terms()) c[e[var]] = k;

  // Root at the origin first.
  unsigned zmult = 0;
  while (c.size() > 1 && c[0].is_zero()) {
    c.erase(c.begin());
    ++zmult;
  }
  if (zmult > 0) res.exact.push_back({ExactComplex(0), zmult});

  while (c.size() > 1) {
    std::vector<std::complex<double>> fc(c.size());
    for (size_t k = 0; k < c.size(); ++k) fc[k] = c[k].to_complex();
    auto numeric = durand_kerner(fc);

    bool progress = false;
    for (const auto& nr : numeric) {
      std::vector<Rational> res_re, res_im;
      push_candidates(nr.real(), res_re);
      push_candidates(nr.imag(), res_im);
      bool accepted_here = false;
      for (const auto& a : res_re) {
        for (const auto& b : res_im) {
          ExactComplex cand(a, b);
          if (res.has_root(cand)) continue;
          unsigned mult = 0;
          while (c.size() > 1) {
            auto q = deflate(c, cand);
            if (!q) break;
            c = *q;
            ++mult;
          }
          if (mult > 0) {
            res.exact.push_back({cand, mult});
            progress = true;
            accepted_here = true;
            break;
          }
        }
        if (accepted_here) break;
      }
      if (c.size() <= 1) break;
    }
    if (!progress) break;
  }

  res.complete = (c.size() <= 1);
  if (!res.complete) {
    std::vector<std::complex<double>> fc(c.size());
    for (size_t k = 0; k < c.size(); ++k) fc[k] = c[k].to_complex();
    res.unresolved = durand_kerner(fc);
  }

  // Deterministic order.
  std::sort(res.exact.begin(), res.exact.end(),
            [](const auto& a, const auto& b) { return exact_less(a.first, b.first); });
  return res;
}

}  // namespace crgeo
