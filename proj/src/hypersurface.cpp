#include "crgeo/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace crgeo {

RealHypersurface::RealHypersurface(HermPoly r, std::string chart_id)
    : rho(std::move(r)), chart(std::move(chart_id)) {
  if (!rho.is_real_symmetric())
    throw std::invalid_argument("RealHypersurface: defining function is not real valued");
}

std::array<ExactComplex, 2> gradient(const HermPoly& rho, const std::vector<ExactComplex>& p) {
  if (rho.nvars() != 2) throw std::invalid_argument("gradient: two complex variables expected");
  return {rho.d_z(0).eval(p), rho.d_z(1).eval(p)};
}

Rational levi_form_exact(const HermPoly& rho, const std::vector<ExactComplex>& p) {
  auto g = gradient(rho, p);
  std::array<ExactComplex, 2> v{-g[1], g[0]};
  Rational n2 = v[0].norm2() + v[1].norm2();
  if (sgn(n2) == 0)
    throw std::domain_error("levi_form_exact: zero gradient, no tangent direction");
  ExactComplex acc(0);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      acc += rho.d_z(i).d_zbar(j).eval(p) * v[i] * v[j].conj();
  if (!acc.is_real())
    throw std::logic_error("levi_form_exact: non-real value from a real defining function");
  return acc.re() / n2;
}

ProperTransformResult proper_transform(const RealHypersurface& h, const BlowupTower& tower,
                                       const std::string& chart_id) {
  if (h.chart != tower.root_id())
    throw std::invalid_argument("proper_transform: hypersurface lives in chart '" + h.chart +
                                "', not in the root chart of the tower");
  HermPoly pulled = tower.pullback(chart_id, h.rho);
  const VarList& vars = tower.chart(chart_id).vars;

  HermPoly total = pulled;
  HermPoly den = HermPoly::constant(vars, ExactComplex(1));
  HoloPoly locus = HoloPoly::constant(vars, ExactComplex(1));
  for (size_t e : tower.exceptional_coords(chart_id)) {
    // Power of |e|^2 dividing the pullback inside the ring.
    unsigned m = total.modulus_divisible_power(e);
    if (m > 0) {
      PairExps mm{Exps(vars.size(), 0), Exps(vars.size(), 0)};
      mm.hol[e] = m;
      mm.anti[e] = m;
      total = total.divide_monomial(mm);
    }
    // Power of |e|^2 that can be cleared as a rational expression off {e=0}.
    unsigned k = pulled.modulus_reduction_power(e);
    if (k > 0) {
      HoloPoly coord = HoloPoly::variable(vars, e);
      den = den * pow(modulus_squared(coord), k);
      locus = locus * coord;
    }
  }
  ProperTransformResult out{RealHypersurface(total, chart_id),
                            ReducedEquation{HermRationalExpr{pulled, den}, locus}};
  return out;
}

std::pair<RationalExpr, RationalExpr> cayley_substitution(const VarList& wvars) {
  HoloPoly w1 = HoloPoly::variable(wvars, size_t(0));
  HoloPoly w2 = HoloPoly::variable(wvars, size_t(1));
  HoloPoly one = HoloPoly::constant(wvars, ExactComplex(1));
  HoloPoly den = one - w2;
  return {RationalExpr(w1, den), RationalExpr((one + w2) * ExactComplex::i(), den)};
}

ExactPoint2 cayley_point(const ExactPoint2& w) {
  ExactComplex den = ExactComplex(1) - w.y;
  if (den.is_zero()) throw std::domain_error("cayley_point: undefined at w2 = 1");
  return ExactPoint2{w.x / den, ExactComplex::i() * (ExactComplex(1) + w.y) / den};
}

CayleyPullback cayley_pullback(const HermPoly& rho) {
  if (rho.nvars() != 2)
    throw std::invalid_argument("cayley_pullback: two complex variables expected");
  VarList wv = {"w1", "w2"};
  HoloPoly w1 = HoloPoly::variable(wv, size_t(0));
  HoloPoly w2 = HoloPoly::variable(wv, size_t(1));
  HoloPoly one = HoloPoly::constant(wv, ExactComplex(1));
  HoloPoly n1 = w1, n2 = (one + w2) * ExactComplex::i(), d = one - w2;

  unsigned dh = 0, da = 0;
  for (const auto& [e, c] : rho.terms()) {
    dh = std::max(dh, e.hol[0] + e.hol[1]);
    da = std::max(da, e.anti[0] + e.anti[1]);
  }

  std::vector<HoloPoly> pn1{HoloPoly::constant(wv, ExactComplex(1))};
  std::vector<HoloPoly> pn2 = pn1, pd = pn1;
  unsigned m = std::max(dh, da);
  for (unsigned k = 1; k <= m; ++k) {
    pn1.push_back(pn1.back() * n1);
    pn2.push_back(pn2.back() * n2);
    pd.push_back(pd.back() * d);
  }

  HermPoly out(wv);
  for (const auto& [e, c] : rho.terms()) {
    unsigned ah = e.hol[0], bh = e.hol[1];
    unsigned aa = e.anti[0], ba = e.anti[1];
    HermPoly t = HermPoly::constant(wv, c);
    t = t * herm(pn1[ah]) * herm(pn2[bh]) * herm(pd[dh - ah - bh]);
    t = t * herm_conj(pn1[aa]) * herm_conj(pn2[ba]) * herm_conj(pd[da - aa - ba]);
    out += t;
  }
  return CayleyPullback{out, dh, da};
}

ExceptionalTrace exceptional_trace(const HermRationalExpr& reduced, size_t exc_index,
                                   const TraceOptions& opt) {
  if (reduced.num.nvars() != 2)
    throw std::invalid_argument("exceptional_trace: two complex variables expected");
  size_t cidx = 1 - exc_index;
  FloatHerm num(reduced.num), den(reduced.den);

  auto limit_value = [&](double r, double theta, std::complex<double> c) {
    std::complex<double> z[2];
    z[exc_index] = std::polar(r, theta);
    z[cidx] = c;
    std::complex<double> d = den.eval(z);
    return (num.eval(z) / d).real();
  };

  ExceptionalTrace out;
  TraceGrid& grid = out.grid;
  grid.pitch = opt.pitch;
  grid.half_extent = opt.window;
  grid.n = static_cast<std::size_t>(std::llround(2.0 * opt.window / opt.pitch)) + 1;
  grid.detected.assign(grid.n * grid.n, 0);

  run_indexed(grid.n * grid.n, opt.mode, [&](std::size_t idx) {
    std::size_t ix = idx / grid.n, iy = idx % grid.n;
    std::complex<double> c = grid.site(ix, iy);
    if (std::abs(c) > opt.window) return;
    auto scan = phase_scan([&](double th) { return limit_value(opt.r_small, th, c); },
                           opt.phases, opt.detect_tol);
    grid.detected[idx] = scan.detected ? 1 : 0;
  });

  // Stabilization diagnostic on a sparse subset: compare the two radii.
  {
    double drift = 0.0;
    std::size_t stride = std::max<std::size_t>(1, grid.n * grid.n / 512);
    for (std::size_t idx = 0; idx < grid.n * grid.n; idx += stride) {
      std::size_t ix = idx / grid.n, iy = idx % grid.n;
      std::complex<double> c = grid.site(ix, iy);
      if (std::abs(c) > opt.window) continue;
      for (int k = 0; k < 8; ++k) {
        double th = 2.0 * M_PI * k / 8;
        double a = limit_value(opt.r_small, th, c);
        double b = limit_value(opt.r_check, th, c);
        if (std::isfinite(a) && std::isfinite(b))
          drift = std::max(drift, std::abs(a - b) / (1.0 + std::abs(a)));
      }
    }
    out.stabilization_drift = drift;
  }

  // Harmonic structure of the phase values: mean and dominant harmonic at a
  // ring of probe points; a linear-in-|c| amplitude with constant mean gives
  // the closed form |c| >= |mean| / slope.
  {
    const int probes = 8;
    const int nth = std::max(opt.phases, 32);
    double sum_mean = 0.0, sum_slope = 0.0;
    double max_mean_dev = 0.0, max_slope_dev = 0.0;
    int harmonic = 0;
    bool usable = true;
    std::vector<double> means(probes), slopes(probes);
    for (int pi = 0; pi < probes && usable; ++pi) {
      double rr = opt.window * (0.35 + 0.06 * pi);
      std::complex<double> c = std::polar(rr, 0.4 + 0.3 * pi);
      std::vector<double> vals(nth);
      bool finite = true;
      for (int k = 0; k < nth; ++k) {
        vals[k] = limit_value(opt.r_small, 2.0 * M_PI * k / nth, c);
        finite = finite && std::isfinite(vals[k]);
      }
      if (!finite) {
        usable = false;
        break;
      }
      double mean = 0.0;
      for (double v : vals) mean += v;
      mean /= nth;
      int best_k = 0;
      double best_amp = 0.0;
      for (int h = 1; h <= 6; ++h) {
        std::complex<double> f(0.0, 0.0);
        for (int k = 0; k < nth; ++k)
          f += vals[k] * std::polar(1.0, -2.0 * M_PI * h * k / nth);
        double amp = 2.0 * std::abs(f) / nth;
        if (amp > best_amp) {
          best_amp = amp;
          best_k = h;
        }
      }
      if (pi == 0)
        harmonic = best_k;
      else if (best_k != harmonic)
        usable = false;
      means[pi] = mean;
      slopes[pi] = best_amp / std::abs(c);
      sum_mean += mean;
      sum_slope += slopes[pi];
    }
    if (usable) {
      double mean = sum_mean / probes, slope = sum_slope / probes;
      for (int pi = 0; pi < probes; ++pi) {
        max_mean_dev = std::max(max_mean_dev, std::abs(means[pi] - mean));
        max_slope_dev = std::max(max_slope_dev, std::abs(slopes[pi] - slope));
      }
      if (slope > 1e-9 && max_mean_dev < 1e-6 && max_slope_dev < 1e-6) {
        out.analysis.closed_form = true;
        out.analysis.harmonic = harmonic;
        out.analysis.mean = mean;
        out.analysis.amplitude_per_unit = slope;
        out.analysis.threshold = std::abs(mean) / slope;
        char buf[128];
        std::snprintf(buf, sizeof buf, "phase circle solvable iff |c| >= %.6g", out.analysis.threshold);
        out.analysis.description = buf;
      }
    }
  }

  char buf[192];
  std::snprintf(buf, sizeof buf,
                "directional limits at radius %.1e, %d phases, detection tolerance %.1e, "
                "grid pitch %.3g on window %.3g",
                opt.r_small, opt.phases, opt.detect_tol, opt.pitch, opt.window);
  out.method = buf;
  return out;
}

double hausdorff_to_annulus(const TraceGrid& grid, double r_lo, double r_hi) {
  // Distance from every detected site to the annulus, exactly.
  double d1 = 0.0;
  bool any_detected = false;
  for (std::size_t ix = 0; ix < grid.n; ++ix) {
    for (std::size_t iy = 0; iy < grid.n; ++iy) {
      if (!grid.detected[ix * grid.n + iy]) continue;
      any_detected = true;
      double a = std::abs(grid.site(ix, iy));
      double d = std::max({0.0, r_lo - a, a - r_hi});
      d1 = std::max(d1, d);
    }
  }

  // Distance from annulus grid sites to the nearest detected site, by an
  // expanding square search bounded well past any sane tolerance.
  double d2 = 0.0;
  long reach = 8;
  for (std::size_t ix = 0; ix < grid.n; ++ix) {
    for (std::size_t iy = 0; iy < grid.n; ++iy) {
      std::complex<double> c = grid.site(ix, iy);
      double a = std::abs(c);
      if (a < r_lo || a > r_hi || a > grid.half_extent) continue;
      double best = std::numeric_limits<double>::infinity();
      for (long ring = 0; ring <= reach && best == std::numeric_limits<double>::infinity();
           ++ring) {
        for (long dx = -ring; dx <= ring; ++dx) {
          for (long dy = -ring; dy <= ring; ++dy) {
            if (std::max(std::labs(dx), std::labs(dy)) != ring) continue;
            long jx = static_cast<long>(ix) + dx, jy = static_cast<long>(iy) + dy;
            if (jx < 0 || jy < 0 || jx >= static_cast<long>(grid.n) ||
                jy >= static_cast<long>(grid.n))
              continue;
            if (!grid.detected[static_cast<std::size_t>(jx) * grid.n +
                               static_cast<std::size_t>(jy)])
              continue;
            double d = std::abs(grid.site(static_cast<std::size_t>(jx),
                                          static_cast<std::size_t>(jy)) -
                                c);
            best = std::min(best, d);
          }
        }
      }
      if (best == std::numeric_limits<double>::infinity()) best = reach * grid.pitch;
      d2 = std::max(d2, best);
    }
  }
  if (!any_detected) return std::numeric_limits<double>::infinity();
  return std::max(d1, d2);
}

}  // namespace crgeo
