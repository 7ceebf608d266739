#include "crgeo/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace crgeo {

int thread_count(ExecMode mode) {
  if (mode == ExecMode::serial) return 1;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

FloatHerm::FloatHerm(const HermPoly& p) : nvars_(p.nvars()) {
  terms_.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) terms_.push_back({c.to_complex(), e.hol, e.anti});
}

std::complex<double> FloatHerm::eval(const std::complex<double>* z) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& t : terms_) {
    std::complex<double> v = t.c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < t.hol[i]; ++k) v *= z[i];
      if (t.anti[i] > 0) {
        std::complex<double> zb = std::conj(z[i]);
        for (unsigned k = 0; k < t.anti[i]; ++k) v *= zb;
      }
    }
    acc += v;
  }
  return acc;
}

SurfaceEval::SurfaceEval(const HermPoly& rho) {
  if (rho.nvars() != 2) throw std::invalid_argument("SurfaceEval: two complex variables expected");
  rho_ = FloatHerm(rho);
  for (size_t i = 0; i < 2; ++i) dz_[i] = FloatHerm(rho.d_z(i));
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) hess_[i][j] = FloatHerm(rho.d_z(i).d_zbar(j));
}

double SurfaceEval::rho(const C2& z) const { return rho_.eval_real(z.data()); }

std::array<std::complex<double>, 2> SurfaceEval::grad(const C2& z) const {
  return {dz_[0].eval(z.data()), dz_[1].eval(z.data())};
}

double SurfaceEval::levi(const C2& z) const {
  auto g = grad(z);
  // Complex tangent direction.
  std::array<std::complex<double>, 2> v{-g[1], g[0]};
  double n2 = std::norm(v[0]) + std::norm(v[1]);
  if (n2 == 0.0) return std::numeric_limits<double>::quiet_NaN();
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) acc += hess_[i][j].eval(z.data()) * v[i] * std::conj(v[j]);
  return acc.real() / n2;
}

namespace {

// One attempt of the zero-set sampler; returns an accepted sample or nullopt.
std::optional<SurfaceSample> zero_set_attempt(const SurfaceEval& surf, const ZeroSetOptions& opt,
                                              uint64_t index) {
  SplitMix64 rng(SplitMix64::mix(opt.seed, index));
  std::array<double, 4> x{};
  std::array<double, 3> free{};
  size_t fi = 0;
  for (size_t k = 0; k < 4; ++k) {
    if (k == opt.polish_axis) continue;
    x[k] = rng.next_in(opt.box.v[k].lo, opt.box.v[k].hi);
    free[fi++] = x[k];
  }
  Interval iv = opt.box.v[opt.polish_axis];
  if (opt.bracket) iv = opt.bracket(free);
  if (!(iv.lo < iv.hi)) return std::nullopt;

  auto value = [&](double t) {
    std::array<double, 4> y = x;
    y[opt.polish_axis] = t;
    C2 z{std::complex<double>(y[0], y[1]), std::complex<double>(y[2], y[3])};
    return surf.rho(z);
  };

  // Sign scan for a bracket.
  double lo = iv.lo, hi = iv.hi;
  double step = (hi - lo) / opt.scan_points;
  double a = lo, fa = value(a);
  double br_a = 0.0, br_b = 0.0;
  bool found = false;
  for (int k = 1; k <= opt.scan_points; ++k) {
    double b = lo + k * step, fb = value(b);
    if (std::isfinite(fa) && std::isfinite(fb) && (fa == 0.0 || (fa < 0.0) != (fb < 0.0))) {
      br_a = a;
      br_b = b;
      found = true;
      break;
    }
    a = b;
    fa = fb;
  }
  if (!found) return std::nullopt;

  // Bisection.
  double va = value(br_a);
  for (int k = 0; k < 200; ++k) {
    double m = 0.5 * (br_a + br_b);
    double vm = value(m);
    if (vm == 0.0) {
      br_a = br_b = m;
      break;
    }
    if ((vm < 0.0) == (va < 0.0)) {
      br_a = m;
      va = vm;
    } else {
      br_b = m;
    }
    if (br_b - br_a < 1e-16 * (1.0 + std::abs(br_a))) break;
  }
  double t = 0.5 * (br_a + br_b);

  // Newton polish on the polish axis (real directional derivative by finite
  // differencing is avoided: use the Wirtinger gradient).
  for (int k = 0; k < 4; ++k) {
    std::array<double, 4> y = x;
    y[opt.polish_axis] = t;
    C2 z{std::complex<double>(y[0], y[1]), std::complex<double>(y[2], y[3])};
    double f = surf.rho(z);
    auto g = surf.grad(z);
    // d rho / d t where t is the chosen real coordinate.
    size_t ci = opt.polish_axis / 2;
    double deriv = (opt.polish_axis % 2 == 0) ? 2.0 * g[ci].real() : -2.0 * g[ci].imag();
    if (deriv == 0.0 || !std::isfinite(deriv)) break;
    double t2 = t - f / deriv;
    if (t2 < iv.lo || t2 > iv.hi) break;
    t = t2;
  }

  std::array<double, 4> y = x;
  y[opt.polish_axis] = t;
  C2 z{std::complex<double>(y[0], y[1]), std::complex<double>(y[2], y[3])};
  double res = std::abs(surf.rho(z));
  if (res > opt.max_residual) return std::nullopt;
  if (opt.accept && !opt.accept(z)) return std::nullopt;
  return SurfaceSample{z, res};
}

}  // namespace

std::vector<SurfaceSample> sample_zero_set(const SurfaceEval& surf, const ZeroSetOptions& opt,
                                           ExecMode mode) {
  std::vector<std::optional<SurfaceSample>> slots(opt.attempts);
  run_indexed(opt.attempts, mode,
              [&](std::size_t i) { slots[i] = zero_set_attempt(surf, opt, i); });
  std::vector<SurfaceSample> out;
  out.reserve(opt.attempts / 2);
  for (auto& s : slots)
    if (s) out.push_back(*s);
  return out;
}

std::vector<C2> sample_unit_sphere(std::size_t count, uint64_t seed, ExecMode mode) {
  std::vector<C2> out(count);
  run_indexed(count, mode, [&](std::size_t i) {
    SplitMix64 rng(SplitMix64::mix(seed, i));
    std::array<double, 4> g{};
    for (int k = 0; k < 2; ++k) {
      // Box-Muller; u1 in (0, 1].
      double u1 = 1.0 - rng.next_unit();
      double u2 = rng.next_unit();
      double r = std::sqrt(-2.0 * std::log(u1));
      g[2 * k] = r * std::cos(2.0 * M_PI * u2);
      g[2 * k + 1] = r * std::sin(2.0 * M_PI * u2);
    }
    double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
    if (n == 0.0) {
      g = {1.0, 0.0, 0.0, 0.0};
      n = 1.0;
    }
    out[i] = C2{std::complex<double>(g[0] / n, g[1] / n), std::complex<double>(g[2] / n, g[3] / n)};
  });
  return out;
}

std::vector<double> levi_scan(const SurfaceEval& surf, const std::vector<C2>& points,
                              ExecMode mode) {
  std::vector<double> out(points.size());
  run_indexed(points.size(), mode, [&](std::size_t i) { out[i] = surf.levi(points[i]); });
  return out;
}

}  // namespace crgeo
