#pragma once

// Root extraction for univariate polynomials over the Gaussian rationals.
//
// Strategy: numeric roots (Durand-Kerner) only ever PROPOSE candidates; a
// candidate counts as a root when synthetic division by (x - r) leaves a zero
// remainder, exactly. Accepted roots are deflated out with their full
// multiplicity, so `complete` certifies that the polynomial splits into
// Gaussian-rational linear factors. Anything left over is reported with its
// numeric approximations as isolating information.

#include <complex>
#include <optional>
#include <vector>

#include "crgeo/poly.hpp"

namespace crgeo {

struct UniRootResult {
  std::vector<std::pair<ExactComplex, unsigned>> exact;  // (root, multiplicity)
  std::vector<std::complex<double>> unresolved;          // approximate leftover roots
  bool complete = false;                                 // fully split over Q(i)

  bool has_root(const ExactComplex& r) const {
    for (const auto& [root, mult] : exact)
      if (root == r) return true;
    return false;
  }
};

// `p` must involve only `var` (degree zero in every other variable).
UniRootResult exact_roots(const HoloPoly& p, size_t var);

// Best rational approximation with denominator <= max_den (continued
// fractions). nullopt for non-finite or absurdly large input.
std::optional<Rational> rationalize(double x, unsigned long max_den);

// Durand-Kerner on ascending coefficients (c[0] + c[1] x + ...). The leading
// coefficient must be nonzero.
std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> coeffs);

}  // namespace crgeo
