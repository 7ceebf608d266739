#pragma once

// Numeric kernels. Every kernel is written as a per-index body driven either
// serially or by an OpenMP parallel loop; the serial form is the reference
// the parallel one is tested against (outputs must match bit for bit, which
// the per-index RNG substreams and index-ordered writes guarantee).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crgeo/poly.hpp"
#include "crgeo/rng.hpp"

namespace crgeo {

enum class ExecMode { serial, parallel };

int thread_count(ExecMode mode);

template <typename Fn>
void run_indexed(std::size_t n, ExecMode mode, const Fn& body) {
  if (mode == ExecMode::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i) body(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

using C2 = std::array<std::complex<double>, 2>;

// Flattened HermPoly for fast float evaluation (round-to-nearest per
// double operation; the exact ring is the authority on identities).
class FloatHerm {
 public:
  FloatHerm() = default;
  explicit FloatHerm(const HermPoly& p);

  std::complex<double> eval(const std::complex<double>* z) const;
  double eval_real(const std::complex<double>* z) const { return eval(z).real(); }
  std::size_t nvars() const { return nvars_; }

 private:
  struct Term {
    std::complex<double> c;
    std::vector<unsigned> hol, anti;
  };
  std::vector<Term> terms_;
  std::size_t nvars_ = 0;
};

// Defining function bundle: rho with its first and second Wirtinger
// derivatives, for residuals, gradients and the Levi form on C^2.
class SurfaceEval {
 public:
  explicit SurfaceEval(const HermPoly& rho);

  double rho(const C2& z) const;
  std::array<std::complex<double>, 2> grad(const C2& z) const;  // d/dz_i

  // Levi form on the complex tangent v = (-d rho/dz2, d rho/dz1), divided by
  // |v|^2. NaN at points with zero gradient.
  double levi(const C2& z) const;

 private:
  FloatHerm rho_, dz_[2], hess_[2][2];
};

struct Interval {
  double lo = 0.0, hi = 0.0;
};
struct Box4 {
  // re z1, im z1, re z2, im z2
  std::array<Interval, 4> v;
};

struct SurfaceSample {
  C2 z;
  double residual = 0.0;
};

struct ZeroSetOptions {
  Box4 box;
  std::size_t polish_axis = 3;  // which of the four real coordinates is solved for
  std::size_t attempts = 10000;
  uint64_t seed = 1;
  double max_residual = 1e-12;
  int scan_points = 64;  // sign-scan resolution along the polish axis
  // Optional replacement interval for the polish axis, from the three free
  // coordinates (drawn first); empty interval (lo >= hi) skips the attempt.
  std::function<Interval(const std::array<double, 3>&)> bracket;
  // Optional acceptance filter on the polished point.
  std::function<bool(const C2&)> accept;
};

// Draw three coordinates per attempt, solve the fourth by sign-scan +
// bisection + Newton polish. Returns accepted samples in attempt order,
// identical for both execution modes.
std::vector<SurfaceSample> sample_zero_set(const SurfaceEval& surf, const ZeroSetOptions& opt,
                                           ExecMode mode);

// Unit vectors in R^4 ~ C^2 (normalized 4-dimensional Gaussians).
std::vector<C2> sample_unit_sphere(std::size_t count, uint64_t seed, ExecMode mode);

std::vector<double> levi_scan(const SurfaceEval& surf, const std::vector<C2>& points,
                              ExecMode mode);

// Phase scan of a real-valued limit function f(theta) at one grid site:
// detected when the values change sign over the phase circle or come within
// `tol` of zero.
struct PhaseScanResult {
  bool detected = false;
  double min_abs = 0.0;
};

template <typename Fn>
PhaseScanResult phase_scan(const Fn& f, int phases, double tol) {
  PhaseScanResult r;
  double prev = 0.0;
  bool prev_set = false;
  double min_abs = std::numeric_limits<double>::infinity();
  bool sign_change = false;
  for (int k = 0; k < phases; ++k) {
    double v = f(2.0 * M_PI * k / phases);
    if (!std::isfinite(v)) continue;
    min_abs = std::min(min_abs, std::abs(v));
    if (prev_set && ((v < 0.0) != (prev < 0.0))) sign_change = true;
    prev = v;
    prev_set = true;
  }
  r.min_abs = min_abs;
  r.detected = sign_change || min_abs <= tol;
  return r;
}

}  // namespace crgeo
