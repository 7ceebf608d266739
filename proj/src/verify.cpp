#include "crgeo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "crgeo/construction.hpp"
#include "crgeo/hypersurface.hpp"
#include "crgeo/projective.hpp"
#include "crgeo/roots.hpp"

namespace crgeo {

namespace cons = construction;

const char* verdict_str(Verdict v) { return v == Verdict::pass ? "PASS" : "FAIL"; }

const char* claim_mode_str(ClaimMode m) {
  switch (m) {
    case ClaimMode::symbolic: return "symbolic";
    case ClaimMode::numeric: return "numeric";
    default: return "mixed";
  }
}

bool ClaimResult::passed() const {
  if (verdict != Verdict::pass) return false;
  for (const auto& s : sub)
    if (!s.passed()) return false;
  return true;
}

void VerifyOptions::set_tolerance(const std::string& key, double value) {
  if (key == "residual")
    tol_residual = value;
  else if (key == "cluster")
    tol_cluster = value;
  else if (key == "hausdorff")
    tol_hausdorff = value;
  else if (key == "window")
    window = value;
  else
    throw std::invalid_argument("unknown tolerance key '" + key +
                                "' (expected residual|cluster|hausdorff|window)");
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

namespace {

ClaimResult make_claim(std::string id, std::string statement, ClaimMode mode) {
  ClaimResult c;
  c.claim_id = std::move(id);
  c.statement = std::move(statement);
  c.mode = mode;
  return c;
}

void set_verdict(ClaimResult& c, bool ok) { c.verdict = ok ? Verdict::pass : Verdict::fail; }

// Exact zero check with a uniform witness convention.
bool check_zero(ClaimResult& c, const std::string& what, const HermPoly& p) {
  if (p.is_zero()) {
    c.witness(what, "0 (exact)");
    return true;
  }
  c.witness(what, "NONZERO: " + p.str());
  return false;
}

bool check_zero(ClaimResult& c, const std::string& what, const HoloPoly& p) {
  if (p.is_zero()) {
    c.witness(what, "0 (exact)");
    return true;
  }
  c.witness(what, "NONZERO: " + p.str());
  return false;
}

HoloPoly zvar(size_t i) { return HoloPoly::variable(cons::zvars(), i); }
HoloPoly wvar(size_t i) { return HoloPoly::variable(cons::wvars(), i); }

std::vector<ExactComplex> to_exact_vec(const ExactPoint2& p) { return {p.x, p.y}; }

}  // namespace

// ---------------------------------------------------------------------------
// construction.identities

ClaimResult verify_construction_identities() {
  ClaimResult c = make_claim(
      "construction.identities",
      "exact identities: chart pullbacks of the quadric, reduced equations, sphere transport, "
      "composed map, image line form",
      ClaimMode::symbolic);

  BlowupTower tower = cons::origin_tower();
  HermPoly rho = cons::model_rho();
  bool ok = true;

  {
    ClaimResult s = make_claim("construction.identities.pullbacks",
                               "pullbacks of |z1|^2 - Im z2 through the tower match the "
                               "hand-expanded forms in all four second-level charts",
                               ClaimMode::symbolic);
    bool sok = true;
    HermPoly expect_u1p = modulus_squared(zvar(0)) - im_part(zvar(0) * zvar(1));
    sok &= check_zero(s, "U1p", tower.pullback(cons::kU1p, rho) - expect_u1p);
    HermPoly expect_u1pp = modulus_squared(zvar(0) * zvar(1)) - im_part(zvar(1));
    sok &= check_zero(s, "U1pp", tower.pullback(cons::kU1pp, rho) - expect_u1pp);
    HermPoly expect_u2p = modulus_squared(zvar(0)) - im_part(zvar(0) * zvar(0) * zvar(1));
    sok &= check_zero(s, "U2p", tower.pullback(cons::kU2p, rho) - expect_u2p);
    HermPoly expect_u2pp =
        modulus_squared(zvar(0) * zvar(1)) - im_part(zvar(0) * zvar(1) * zvar(1));
    sok &= check_zero(s, "U2pp", tower.pullback(cons::kU2pp, rho) - expect_u2pp);
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim(
        "construction.identities.reduced-equations",
        "cleared reduced equations: Im(z1 z2) = |z1|^2 on the first chart, Im(z1^2 z2) = |z1|^2 "
        "and Im(z1 z2^2) = |z1 z2|^2 after the second blow-up, with the |e|^2 denominators",
        ClaimMode::symbolic);
    bool sok = true;
    RealHypersurface m(rho, cons::kRoot);

    auto u1p = proper_transform(m, tower, cons::kU1p);
    sok &= check_zero(s, "U1p cleared identity",
                      im_part(zvar(0) * zvar(1)) - modulus_squared(zvar(0)) +
                          tower.pullback(cons::kU1p, rho));
    sok &= check_zero(s, "U1p denominator |z1|^2",
                      u1p.reduced.expr.den - modulus_squared(zvar(0)));
    sok &= check_zero(s, "U1p numerator = pullback",
                      u1p.reduced.expr.num - tower.pullback(cons::kU1p, rho));

    auto u2p = proper_transform(m, tower, cons::kU2p);
    sok &= check_zero(s, "U2p cleared identity",
                      im_part(zvar(0) * zvar(0) * zvar(1)) - modulus_squared(zvar(0)) +
                          tower.pullback(cons::kU2p, rho));
    sok &= check_zero(s, "U2p denominator |z1|^2",
                      u2p.reduced.expr.den - modulus_squared(zvar(0)));

    auto u2pp = proper_transform(m, tower, cons::kU2pp);
    sok &= check_zero(s, "U2pp cleared identity",
                      im_part(zvar(0) * zvar(1) * zvar(1)) -
                          modulus_squared(zvar(0)) * modulus_squared(zvar(1)) +
                          tower.pullback(cons::kU2pp, rho));
    sok &= check_zero(s, "U2pp denominator |z1|^2 |z2|^2",
                      u2pp.reduced.expr.den -
                          modulus_squared(zvar(0)) * modulus_squared(zvar(1)));
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim(
        "construction.identities.sphere-transport",
        "|1-w2|^2 * (rho o cayley) = |w1|^2 + |w2|^2 - 1: the substitution carries the unit "
        "sphere onto the quadric, matching orientations (both sides negative inside)",
        ClaimMode::symbolic);
    auto pb = cayley_pullback(cons::model_rho());
    bool sok = (pb.degree_hol == 1 && pb.degree_anti == 1);
    s.witness("cleared denominator", "(1-w2)^" + std::to_string(pb.degree_hol) + " * (1-~w2)^" +
                                         std::to_string(pb.degree_anti));
    sok &= check_zero(s, "cleared pullback minus sphere function", pb.cleared - cons::sphere_rho());
    ExactPoint2 w{ExactComplex(1), ExactComplex(0)};
    ExactPoint2 z = cayley_point(w);
    sok &= (z.x == ExactComplex(1) && z.y == ExactComplex::i());
    sok &= cons::model_rho().eval({z.x, z.y}).is_zero();
    s.witness("image of the sphere point (1, 0)", z.str() + ", on the quadric exactly");
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim(
        "construction.identities.composition",
        "[z1^3 : z2^2 : z2] o cayley equals [w1^3 : -(1+w2)^2(1-w2) : i(1+w2)(1-w2)^2] after "
        "clearing (1-w2)^3, and the target change gives [w1^3 : -(1+w2)(1-w2^2) : 2i(1-w2^2)]",
        ClaimMode::symbolic);
    bool sok = true;
    ProjectiveTriple fw = cons::map_w();
    sok &= (fw == cons::map_w_literal());
    s.witness("composed map", fw.str());
    s.witness("cleared factors", std::to_string(fw.cleared_factors().size()) + " * (1-w2)");
    sok &= (fw.cleared_factors().size() == 3);
    ProjectiveTriple ff = cons::map_final();
    sok &= (ff == cons::map_final_literal());
    s.witness("after target change", ff.str());
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim("construction.identities.line-form",
                               "the linear form zeta2 - i zeta1 on the composed map equals "
                               "2i(1 - w2^2) identically",
                               ClaimMode::symbolic);
    HoloPoly one = HoloPoly::constant(cons::wvars(), ExactComplex(1));
    HoloPoly expect = ExactComplex(Rational(0), Rational(2)) * (one - wvar(1) * wvar(1));
    bool sok = check_zero(s, "line form minus 2i(1-w2^2)", cons::line_form(cons::map_w()) - expect);
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  set_verdict(c, ok);
  return c;
}

// ---------------------------------------------------------------------------
// i.indeterminacy

ClaimResult verify_indeterminacy() {
  ClaimResult c = make_claim(
      "i.indeterminacy",
      "claim (i): the base locus is {(0,1), (0,-1)}, on the unit sphere; the pole divisor of the "
      "affine pieces is supported on {w2 = 1} u {w2 = -1}; in the z-model the base locus is "
      "{(0,0)} with pole divisor {z2 = 0}",
      ClaimMode::symbolic);
  bool ok = true;

  ProjectiveTriple fw = cons::map_w();
  BaseLocus bl = base_locus(fw);
  bool points_ok = bl.points.size() == 2 && bl.certified_finite &&
                   bl.points[0] == ExactPoint2{ExactComplex(0), ExactComplex(-1)} &&
                   bl.points[1] == ExactPoint2{ExactComplex(0), ExactComplex(1)};
  ok &= points_ok;
  std::string pts;
  for (const auto& p : bl.points) pts += (pts.empty() ? "" : ", ") + p.str();
  c.witness("base locus", pts + (bl.certified_finite ? " (certified finite)" : " (NOT certified)"));
  for (const auto& n : bl.notes) c.witness("base locus note", n);

  HermPoly sphere = cons::sphere_rho();
  ok &= sphere.eval(to_exact_vec(cons::p_plus())).is_zero();
  ok &= sphere.eval(to_exact_vec(cons::p_minus())).is_zero();
  c.witness("p+ and p- on the sphere", "sphere function vanishes exactly at both");

  PoleDivisor pd = pole_divisor(fw, 2);
  HoloPoly one = HoloPoly::constant(cons::wvars(), ExactComplex(1));
  HoloPoly expect_div =
      ExactComplex::i() * ((one + wvar(1)) * (one - wvar(1)) * (one - wvar(1)));
  ok &= check_zero(c, "pole divisor minus i(1+w2)(1-w2)^2", pd.divisor - expect_div);
  UniRootResult proots = exact_roots(pd.divisor, 1);
  bool roots_ok = proots.complete && proots.exact.size() == 2 &&
                  proots.has_root(ExactComplex(-1)) && proots.has_root(ExactComplex(1));
  ok &= roots_ok;
  std::string rs;
  for (const auto& [r, m] : proots.exact)
    rs += (rs.empty() ? "" : ", ") + r.str() + " (multiplicity " + std::to_string(m) + ")";
  c.witness("pole divisor support", rs);

  ProjectiveTriple fz = cons::map_z();
  BaseLocus blz = base_locus(fz);
  ok &= blz.points.size() == 1 && blz.certified_finite &&
        blz.points[0] == ExactPoint2{ExactComplex(0), ExactComplex(0)};
  c.witness("z-model base locus", blz.points.empty() ? "(none)" : blz.points[0].str());
  ok &= check_zero(c, "z-model pole divisor minus z2", pole_divisor(fz, 2).divisor - zvar(1));

  auto [f1, f2] = cons::map_z_affine();
  RationalExpr jac = f1.derivative(0) * f2.derivative(1) - f1.derivative(1) * f2.derivative(0);
  ok &= !jac.num().is_zero();
  c.witness("jacobian determinant of the affine pair", jac.str() + " (not identically zero)");

  set_verdict(c, ok);
  return c;
}

// ---------------------------------------------------------------------------
// i.cluster.*

ClaimResult verify_cluster_singleton(bool plus, const VerifyOptions& opt) {
  std::string which = plus ? "p+" : "p-";
  ProjectivePoint target = plus ? ProjectivePoint::of(0, 1, 0) : ProjectivePoint::of(0, 0, 1);
  ClaimResult c = make_claim(
      std::string("i.cluster.") + (plus ? "p+" : "p-"),
      "claim (i): images of sphere points near " + which + " cluster at the single point " +
          target.str() + "; the cluster diameter shrinks with the approach radius",
      ClaimMode::numeric);

  auto t0 = std::chrono::steady_clock::now();
  ProjectiveTriple fw = cons::map_w();
  std::complex<double> base2 = plus ? 1.0 : -1.0;

  bool ok = true;
  double dist_at_1e4 = 0.0;
  std::vector<double> maxdist;
  for (double r : opt.radii) {
    double dmax = 0.0;
    for (int k = 0; k < opt.phases; ++k) {
      double phi = 2.0 * M_PI * k / opt.phases;
      std::complex<double> dir = std::polar(1.0, phi);
      // Three tangent families at (0, +-1): complex-tangent, totally real,
      // and mixed. Points are renormalized to unit length, hence exactly on
      // the sphere up to floating roundoff.
      const std::array<C2, 3> fams{
          C2{r * dir, base2},
          C2{0.0, base2 + r * std::complex<double>(0.0, 1.0) * dir},
          C2{r * dir / std::sqrt(2.0),
             base2 + r * std::complex<double>(0.0, 1.0) / std::sqrt(2.0)}};
      for (const auto& f : fams) {
        double n = std::sqrt(std::norm(f[0]) + std::norm(f[1]));
        std::vector<std::complex<double>> w{f[0] / n, f[1] / n};
        auto img = fw.eval(w);
        dmax = std::max(dmax, chart_distance(img, target));
      }
    }
    maxdist.push_back(dmax);
    c.witness("max chart distance at radius " + fmt_double(r), fmt_double(dmax));
    if (r == 1e-4) dist_at_1e4 = dmax;
  }
  for (size_t i = 0; i + 1 < maxdist.size(); ++i) ok &= (maxdist[i + 1] < maxdist[i]);
  c.witness("strictly decreasing along the radius schedule", ok ? "yes" : "NO");
  if (dist_at_1e4 > 0.0) {
    bool tol_ok = dist_at_1e4 <= opt.tol_cluster;
    c.witness("tolerance at radius 1e-4",
              fmt_double(dist_at_1e4) + " <= " + fmt_double(opt.tol_cluster) +
                  (tol_ok ? "" : " VIOLATED"));
    ok &= tol_ok;
  }
  // Budget check only; the measured time is not recorded as a witness so
  // that reports from identical options stay byte-identical.
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = elapsed <= 10.0;
  c.witness("completed within the 10 s budget", in_budget ? "yes" : "NO");
  ok &= in_budget;

  set_verdict(c, ok);
  return c;
}

// ---------------------------------------------------------------------------
// ii.tower.*

namespace {

struct ZModelAnalysis {
  BlowupTower tower = cons::origin_tower();
  ProjectiveTriple fz = cons::map_z();
  std::map<std::string, ProjectiveTriple> lifts;

  double e2_hausdorff = std::numeric_limits<double>::infinity();
  ExceptionalTrace e2_trace;
  double e1_detected_fraction = 0.0;
  std::size_t e3_attempts = 0, e3_found = 0;
  std::size_t levi_count_u2p = 0, levi_count_u2pp = 0;
  double levi_min = std::numeric_limits<double>::infinity();
  double sphere_levi_dev = std::numeric_limits<double>::infinity();
  Rational origin_levi{0};
};

ZModelAnalysis analyze_z_model(const VerifyOptions& opt) {
  ZModelAnalysis a;
  for (const char* id :
       {cons::kU1p, cons::kU1pp, cons::kU2p, cons::kU2pp, cons::kU3p, cons::kU3pp})
    a.lifts.emplace(id, lift(a.fz, a.tower, id));

  RealHypersurface m(cons::model_rho(), cons::kRoot);

  // Trace of the transformed hypersurface on E2, second-level primary chart.
  {
    auto pt = proper_transform(m, a.tower, cons::kU2p);
    TraceOptions topt;
    topt.phases = opt.phases;
    topt.window = opt.window;
    topt.mode = opt.mode;
    a.e2_trace = exceptional_trace(pt.reduced.expr, 0, topt);
    a.e2_hausdorff = hausdorff_to_annulus(a.e2_trace.grid, 1.0, opt.window);
  }

  // Trace on E1 in the first-level secondary chart: expected to be all of it.
  {
    auto pt = proper_transform(m, a.tower, cons::kU1pp);
    TraceOptions topt;
    topt.phases = opt.phases;
    topt.window = 1.2;
    topt.mode = opt.mode;
    auto tr = exceptional_trace(pt.reduced.expr, 1, topt);
    std::size_t in_window = 0, detected = 0;
    for (std::size_t ix = 0; ix < tr.grid.n; ++ix) {
      for (std::size_t iy = 0; iy < tr.grid.n; ++iy) {
        if (std::abs(tr.grid.site(ix, iy)) > tr.grid.half_extent) continue;
        ++in_window;
        detected += tr.grid.detected[ix * tr.grid.n + iy];
      }
    }
    a.e1_detected_fraction = in_window ? double(detected) / double(in_window) : 0.0;
  }

  // No transformed-hypersurface points over the small bidisc off E2's
  // required band: attempts constrained to |z2| <= 0.9.
  {
    auto pt = proper_transform(m, a.tower, cons::kU2p);
    SurfaceEval surf(pt.total.rho);
    ZeroSetOptions zopt;
    zopt.box.v = {Interval{-1.0, 1.0}, Interval{-1.0, 1.0}, Interval{-0.9, 0.9},
                  Interval{-0.9, 0.9}};
    zopt.polish_axis = 3;
    zopt.attempts = opt.sample_count * 10;
    zopt.seed = SplitMix64::mix(opt.seed, 0xE3);
    // The polish interval is cut down so |z2| <= 0.9 holds on the whole
    // bracket: the sampler searches only inside the disc.
    zopt.bracket = [](const std::array<double, 3>& free) {
      double re2 = free[2];
      double lim = 0.81 - re2 * re2;
      if (lim <= 0.0) return Interval{0.0, 0.0};
      double b = std::sqrt(lim);
      return Interval{-b, b};
    };
    auto found = sample_zero_set(surf, zopt, opt.mode);
    a.e3_attempts = zopt.attempts;
    a.e3_found = found.size();
  }

  // Levi positivity of the twice-transformed hypersurface off the
  // exceptional locus, in both second-level charts, plus the sphere check.
  {
    auto pt2p = proper_transform(m, a.tower, cons::kU2p);
    SurfaceEval s2p(pt2p.total.rho);
    ZeroSetOptions zopt;
    zopt.box.v = {Interval{-1.5, 1.5}, Interval{-1.5, 1.5}, Interval{-3.0, 3.0},
                  Interval{-3.0, 3.0}};
    zopt.polish_axis = 3;
    zopt.attempts = opt.sample_count * 4;
    zopt.seed = SplitMix64::mix(opt.seed, 0x2B);
    zopt.accept = [](const C2& z) { return std::abs(z[0]) >= 1e-3; };
    auto samples = sample_zero_set(s2p, zopt, opt.mode);
    std::vector<C2> pts;
    pts.reserve(samples.size());
    for (const auto& s : samples) pts.push_back(s.z);
    auto levis = levi_scan(s2p, pts, opt.mode);
    a.levi_count_u2p = levis.size();
    for (double l : levis)
      if (std::isfinite(l)) a.levi_min = std::min(a.levi_min, l);

    auto pt2pp = proper_transform(m, a.tower, cons::kU2pp);
    SurfaceEval s2pp(pt2pp.total.rho);
    ZeroSetOptions zopt2;
    zopt2.box.v = {Interval{-2.0, 2.0}, Interval{-2.0, 2.0}, Interval{-1.5, 1.5},
                   Interval{-1.5, 1.5}};
    zopt2.polish_axis = 1;
    zopt2.attempts = opt.sample_count * 4;
    zopt2.seed = SplitMix64::mix(opt.seed, 0x2C);
    zopt2.accept = [](const C2& z) {
      return std::abs(z[0]) >= 1e-3 && std::abs(z[1]) >= 1e-3;
    };
    auto samples2 = sample_zero_set(s2pp, zopt2, opt.mode);
    std::vector<C2> pts2;
    pts2.reserve(samples2.size());
    for (const auto& s : samples2) pts2.push_back(s.z);
    auto levis2 = levi_scan(s2pp, pts2, opt.mode);
    a.levi_count_u2pp = levis2.size();
    for (double l : levis2)
      if (std::isfinite(l)) a.levi_min = std::min(a.levi_min, l);

    SurfaceEval ssph(cons::sphere_rho());
    auto spts = sample_unit_sphere(opt.sample_count, SplitMix64::mix(opt.seed, 0x54), opt.mode);
    auto slevi = levi_scan(ssph, spts, opt.mode);
    double dev = 0.0;
    for (double l : slevi) dev = std::max(dev, std::abs(l - 1.0));
    a.sphere_levi_dev = dev;

    a.origin_levi = levi_form_exact(cons::model_rho(),
                                    {ExactComplex(0), ExactComplex(0)});
  }
  return a;
}

ClaimResult tower_claim(bool plus, const VerifyOptions& opt, const ZModelAnalysis& a) {
  ClaimResult c = make_claim(
      std::string("ii.tower.") + (plus ? "p+" : "p-"),
      std::string("claim (ii) at ") + (plus ? "p+" : "p-") +
          ": verified via proof ingredients through three origin blow-ups of the z-model" +
          (plus ? ", reduced to p- by the exact symmetry (w1, w2) -> (w1, -w2)" : ""),
      ClaimMode::mixed);
  bool ok = true;
  ProjectivePoint value = plus ? ProjectivePoint::of(0, 1, 0) : ProjectivePoint::of(0, 0, 1);

  if (plus) {
    ClaimResult s = make_claim("ii.tower.p+.symmetry",
                               "the source symmetry fixes the sphere, carries p+ to p-, and "
                               "conjugates the map by an exact target change",
                               ClaimMode::symbolic);
    bool sok = true;
    auto [s1, s2] = cons::pm_swap_source();
    ProjectiveTriple lhs = compose_source(cons::map_w(), s1, s2);
    ProjectiveTriple rhs = compose_target(cons::map_w(), cons::pm_swap_target());
    sok &= (lhs == rhs);
    s.witness("F o sigma = A o F", sok ? "exact" : "FAILS");
    HermPoly sph = cons::sphere_rho();
    HermPoly swapped = sph.substitute({herm(wvar(0)), herm(-wvar(1))});
    sok &= check_zero(s, "sphere function invariance", swapped - sph);
    ExactPoint2 swapped_pp{cons::p_plus().x, -cons::p_plus().y};
    ExactPoint2 z0 = cayley_point(swapped_pp);
    sok &= (z0.x.is_zero() && z0.y.is_zero());
    s.witness("p+ after symmetry and substitution", z0.str());
    Mat3 A = cons::pm_swap_target();
    std::array<ExactComplex, 3> e{ExactComplex(0), ExactComplex(0), ExactComplex(1)};
    std::array<ExactComplex, 3> img{};
    for (int row = 0; row < 3; ++row)
      for (int col = 0; col < 3; ++col) img[row] += A[row][col] * e[col];
    ProjectivePoint tv = ProjectivePoint::of(img[0], img[1], img[2]);
    sok &= (tv == value);
    s.witness("target value transported from [0:0:1]", tv.str());
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  } else {
    ClaimResult s = make_claim("ii.tower.p-.transport",
                               "the substitution carries p- to the origin of the z-model, where "
                               "the tower is built",
                               ClaimMode::symbolic);
    ExactPoint2 z0 = cayley_point(cons::p_minus());
    bool sok = z0.x.is_zero() && z0.y.is_zero();
    s.witness("image of p-", z0.str());
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim(std::string(c.claim_id) + ".lift-forms",
                               "lifted triples in all six charts match the hand-computed forms "
                               "after clearing exceptional coordinates",
                               ClaimMode::symbolic);
    bool sok = true;
    const VarList& zv = cons::zvars();
    auto expect = [&](const char* chart, std::array<HoloPoly, 3> comps) {
      ProjectiveTriple e = ProjectiveTriple::raw(std::move(comps));
      bool match = (a.lifts.at(chart) == e);
      s.witness(std::string(chart), a.lifts.at(chart).str() + (match ? "" : "  EXPECTED " + e.str()));
      return match;
    };
    HoloPoly z1 = zvar(0), z2 = zvar(1), one = HoloPoly::constant(zv, ExactComplex(1));
    sok &= expect(cons::kU1p, {z1 * z1, z1 * z2 * z2, z2});
    sok &= expect(cons::kU1pp, {pow(z1, 3) * z2 * z2, z2, one});
    sok &= expect(cons::kU2p, {z1, z1 * z1 * z2 * z2, z2});
    sok &= expect(cons::kU2pp, {z1 * z1 * z2, z1 * z2 * z2, one});
    sok &= expect(cons::kU3p, {one, pow(z1, 3) * z2 * z2, z2});
    sok &= expect(cons::kU3pp, {z1, z1 * z1 * pow(z2, 3), one});

    auto [g1, g2] = dehomogenize(a.lifts.at(cons::kU2p), 2);
    sok &= g1.equivalent(RationalExpr(z1, z2));
    sok &= g2.equivalent(RationalExpr(z1 * z1 * z2));
    s.witness("U2p affine pair", g1.str() + " , " + g2.str());
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim(std::string(c.claim_id) + ".a-restrictions-constant",
                               "the lifted map is constant on E1 and E2 with the single value " +
                                   value.str(),
                               ClaimMode::symbolic);
    bool sok = true;
    ProjectivePoint zvalue = ProjectivePoint::of(0, 0, 1);
    auto check_const = [&](const char* chart, size_t coord, const char* label) {
      auto r = is_constant(restrict_to_coordinate(a.lifts.at(chart), coord));
      bool good = r.constant && r.value && *r.value == zvalue;
      s.witness(label, good ? "constant " + r.value->str() : "NOT CONSTANT");
      return good;
    };
    sok &= check_const(cons::kU1p, 0, "E1 in U1p");
    sok &= check_const(cons::kU1pp, 1, "E1 in U1pp");
    sok &= check_const(cons::kU2pp, 0, "E1 in U2pp");
    sok &= check_const(cons::kU2p, 0, "E2 in U2p");
    sok &= check_const(cons::kU2pp, 1, "E2 in U2pp");
    sok &= check_const(cons::kU3pp, 0, "E2 in U3pp");
    if (plus)
      s.witness("transported value", "the target change sends [0:0:1] to " + value.str());
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim(std::string(c.claim_id) + ".b-e3-nonconstant",
                               "the lifted map restricted to E3 is not constant in either "
                               "third-level chart",
                               ClaimMode::symbolic);
    bool sok = true;
    auto r1 = is_constant(restrict_to_coordinate(a.lifts.at(cons::kU3p), 0));
    auto r2 = is_constant(restrict_to_coordinate(a.lifts.at(cons::kU3pp), 1));
    sok &= !r1.constant && !r2.constant;
    s.witness("E3 in U3p", restrict_to_coordinate(a.lifts.at(cons::kU3p), 0).str() +
                               (r1.constant ? " CONSTANT" : " (nonconstant)"));
    s.witness("E3 in U3pp", restrict_to_coordinate(a.lifts.at(cons::kU3pp), 1).str() +
                                (r2.constant ? " CONSTANT" : " (nonconstant)"));
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim(std::string(c.claim_id) + ".c-base-locus",
                               "base loci of the lifts are confined to the centers blown up "
                               "next, and empty at the third level",
                               ClaimMode::symbolic);
    bool sok = true;
    ExactPoint2 origin{ExactComplex(0), ExactComplex(0)};
    auto bl_u1p = base_locus(a.lifts.at(cons::kU1p));
    sok &= bl_u1p.certified_finite && bl_u1p.points.size() == 1 && bl_u1p.points[0] == origin;
    s.witness("U1p", bl_u1p.points.empty() ? "(none)" : bl_u1p.points[0].str() +
                                                             " = center of the next blow-up");
    auto bl_u2p = base_locus(a.lifts.at(cons::kU2p));
    sok &= bl_u2p.certified_finite && bl_u2p.points.size() == 1 && bl_u2p.points[0] == origin;
    s.witness("U2p", bl_u2p.points.empty() ? "(none)" : bl_u2p.points[0].str() +
                                                             " = center of the next blow-up");
    for (const char* chart : {cons::kU1pp, cons::kU2pp, cons::kU3p, cons::kU3pp}) {
      auto bl = base_locus(a.lifts.at(chart));
      sok &= bl.certified_finite && bl.points.empty();
      s.witness(chart, bl.points.empty() ? "empty (certified)" : "NONEMPTY");
    }
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim(std::string(c.claim_id) + ".d-trace-on-e2",
                               "the transformed hypersurface meets E2 in the annulus "
                               "1 <= |z2| <= window (directional-limit estimate vs. the exact "
                               "annulus, Hausdorff distance)",
                               ClaimMode::numeric);
    bool sok = a.e2_hausdorff <= opt.tol_hausdorff;
    s.witness("hausdorff distance to the annulus",
              fmt_double(a.e2_hausdorff) + " (tolerance " + fmt_double(opt.tol_hausdorff) + ")");
    s.witness("method", a.e2_trace.method);
    if (a.e2_trace.analysis.closed_form) {
      s.witness("phase-circle closed form", a.e2_trace.analysis.description);
      s.witness("dominant harmonic", std::to_string(a.e2_trace.analysis.harmonic));
      sok &= std::abs(a.e2_trace.analysis.threshold - 1.0) <= 1e-6;
    }
    s.witness("stabilization drift between radii", fmt_double(a.e2_trace.stabilization_drift));
    s.witness("trace on E1 in U1pp covers its window",
              fmt_double(a.e1_detected_fraction * 100.0) + " percent detected");
    sok &= a.e1_detected_fraction >= 0.999;
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim(std::string(c.claim_id) + ".e-band-avoidance",
                               "no transformed-hypersurface point has |z2| <= 0.9 in the "
                               "second-level primary chart: every constrained sampling attempt "
                               "must fail",
                               ClaimMode::numeric);
    bool sok = (a.e3_found == 0) && a.e3_attempts >= opt.sample_count * 10;
    s.witness("attempts", std::to_string(a.e3_attempts));
    s.witness("zero-set points found", std::to_string(a.e3_found));
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  {
    ClaimResult s = make_claim(std::string(c.claim_id) + ".f-levi-positive",
                               "the twice-transformed hypersurface is strongly pseudoconvex off "
                               "E1 u E2 (sampled normalized Levi form positive), and the sphere "
                               "has constant normalized Levi form 1",
                               ClaimMode::numeric);
    bool sok = true;
    std::size_t total = a.levi_count_u2p + a.levi_count_u2pp;
    s.witness("samples (primary chart)", std::to_string(a.levi_count_u2p));
    s.witness("samples (secondary chart)", std::to_string(a.levi_count_u2pp));
    sok &= total >= opt.sample_count;
    sok &= a.levi_min > 0.0;
    s.witness("min normalized Levi form", fmt_double(a.levi_min));
    sok &= a.sphere_levi_dev <= 1e-9;
    s.witness("sphere: max |Levi - 1|", fmt_double(a.sphere_levi_dev));
    bool origin_one = (a.origin_levi == Rational(1));
    sok &= origin_one;
    s.witness("exact normalized Levi form of the quadric at the origin",
              rational_str(a.origin_levi));
    set_verdict(s, sok);
    ok &= sok;
    c.sub.push_back(std::move(s));
  }

  set_verdict(c, ok);
  return c;
}

}  // namespace

ClaimResult verify_tower_claims(bool plus, const VerifyOptions& opt) {
  ZModelAnalysis a = analyze_z_model(opt);
  return tower_claim(plus, opt, a);
}

// ---------------------------------------------------------------------------
// iii.*

ClaimResult verify_line_avoidance(const VerifyOptions& opt) {
  ClaimResult c = make_claim(
      "iii.line-avoidance",
      "claim (iii): the image of the sphere stays away from the line {zeta2 = i zeta1}: the "
      "line form is 2i(1-w2^2), nonzero at both cluster points, with a positive empirical "
      "distance over the sampled sphere",
      ClaimMode::mixed);
  bool ok = true;

  ProjectiveTriple fw = cons::map_w();
  HoloPoly one = HoloPoly::constant(cons::wvars(), ExactComplex(1));
  HoloPoly expect = ExactComplex(Rational(0), Rational(2)) * (one - wvar(1) * wvar(1));
  ok &= check_zero(c, "line form minus 2i(1-w2^2)", cons::line_form(fw) - expect);

  // Exact values of the line form at the two cluster points.
  auto line_at = [](const ProjectivePoint& p) { return p.h[2] - ExactComplex::i() * p.h[1]; };
  ExactComplex at_pminus = line_at(ProjectivePoint::of(0, 0, 1));
  ExactComplex at_pplus = line_at(ProjectivePoint::of(0, 1, 0));
  ok &= !at_pminus.is_zero() && !at_pplus.is_zero();
  c.witness("line form at [0:0:1]", at_pminus.str());
  c.witness("line form at [0:1:0]", at_pplus.str());

  auto pts = sample_unit_sphere(opt.cloud_count, SplitMix64::mix(opt.seed, 0x11), opt.mode);
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const auto& p : pts) {
    std::vector<std::complex<double>> w{p[0], p[1]};
    auto img = fw.eval(w);
    double scale = std::max({std::abs(img[0]), std::abs(img[1]), std::abs(img[2])});
    if (scale == 0.0) continue;  // base point (measure zero; floats never hit it)
    double dist = std::abs(img[2] - std::complex<double>(0, 1) * img[1]) / scale;
    min_ratio = std::min(min_ratio, dist);
  }
  // Points from the refinement schedule near p+-.
  for (double r : opt.radii) {
    for (int k = 0; k < opt.phases; ++k) {
      for (double sign : {1.0, -1.0}) {
        std::complex<double> dir = std::polar(1.0, 2.0 * M_PI * k / opt.phases);
        std::vector<std::complex<double>> w{r * dir, sign};
        double n = std::sqrt(std::norm(w[0]) + std::norm(w[1]));
        w[0] /= n;
        w[1] /= n;
        auto img = fw.eval(w);
        double scale = std::max({std::abs(img[0]), std::abs(img[1]), std::abs(img[2])});
        if (scale == 0.0) continue;
        double dist = std::abs(img[2] - std::complex<double>(0, 1) * img[1]) / scale;
        min_ratio = std::min(min_ratio, dist);
      }
    }
  }
  ok &= (min_ratio > 0.0) && std::isfinite(min_ratio);
  c.witness("empirical distance to the line (scaled)", fmt_double(min_ratio));
  c.witness("samples", std::to_string(opt.cloud_count) + " sphere points plus the refinement schedule");

  set_verdict(c, ok);
  return c;
}

ClaimResult verify_affine_form() {
  ClaimResult c = make_claim(
      "iii.affine-form",
      "claim (iii): in the chart where the image line is at infinity the map has the affine "
      "form (-(i/2) w1^3/(1-w2^2), (i/2)(1+w2)), and 4(1-|f2|^2) = |1-w2|^2 + 2|w1|^2 on the "
      "sphere certifies the closed disc bound",
      ClaimMode::symbolic);
  bool ok = true;

  ProjectiveTriple ff = cons::map_final();
  ok &= (ff == cons::map_final_literal());
  c.witness("triple after target change", ff.str());

  auto [f1, f2] = dehomogenize(ff, 2);
  auto [l1, l2] = cons::map_affine_literal();
  ok &= f1.equivalent(l1) && f2.equivalent(l2);
  c.witness("affine pair", l1.str() + " , " + l2.str());

  // Disc-bound certificate: 4(1 - |f2|^2) - |1-w2|^2 - 2|w1|^2 + 2*rho_sphere = 0.
  HoloPoly one = HoloPoly::constant(cons::wvars(), ExactComplex(1));
  HermPoly f2m = modulus_squared(ExactComplex(Rational(0), make_rational(1, 2)) * (one + wvar(1)));
  HermPoly cert = HermPoly::constant(cons::wvars(), ExactComplex(4)) -
                  ExactComplex(4) * f2m - modulus_squared(one - wvar(1)) -
                  ExactComplex(2) * modulus_squared(wvar(0)) +
                  ExactComplex(2) * cons::sphere_rho();
  ok &= check_zero(c, "disc-bound certificate", cert);
  c.witness("reading", "on the sphere 4(1-|f2|^2) = |1-w2|^2 + 2|w1|^2 >= 0, so |f2| <= 1 with "
                       "equality only at w2 = 1");

  std::vector<ExactComplex> marked{ExactComplex(1), ExactComplex(0)};
  ExactComplex v1 = l1.eval(marked), v2 = l2.eval(marked);
  ok &= (v1 == ExactComplex(Rational(0), make_rational(-1, 2))) &&
        (v2 == ExactComplex(Rational(0), make_rational(1, 2)));
  c.witness("image of the marked sphere point (1, 0)", "(" + v1.str() + ", " + v2.str() + ")");

  set_verdict(c, ok);
  return c;
}

ClaimResult verify_affine_containment(const VerifyOptions& opt) {
  ClaimResult c = make_claim(
      "iii.affine-containment",
      "claim (iii): the affine image cloud of the sphere is finite with second coordinate in "
      "the closed unit disc, stable across seeds",
      ClaimMode::numeric);
  bool ok = true;

  auto [f1, f2] = cons::map_affine_literal();
  const HoloPoly &n1 = f1.num(), &d1 = f1.den(), &n2 = f2.num(), &d2 = f2.den();

  double overall_prev = -1.0;
  bool stable = true;
  for (int si = 0; si < 3; ++si) {
    uint64_t seed = SplitMix64::mix(opt.seed, 0x100 + si);
    auto pts = sample_unit_sphere(opt.cloud_count, seed, opt.mode);
    std::size_t finite = 0;
    double max2 = 0.0, overall = 0.0;
    for (const auto& p : pts) {
      std::vector<std::complex<double>> w{p[0], p[1]};
      std::complex<double> a = n1.eval(w) / d1.eval(w);
      std::complex<double> b = n2.eval(w) / d2.eval(w);
      if (std::isfinite(std::abs(a)) && std::isfinite(std::abs(b))) ++finite;
      max2 = std::max(max2, std::abs(b));
      overall = std::max({overall, std::abs(a), std::abs(b)});
    }
    // Refined points near the indeterminacies.
    for (double r : opt.radii) {
      for (int k = 0; k < opt.phases; ++k) {
        for (double sign : {1.0, -1.0}) {
          std::complex<double> dir = std::polar(1.0, 2.0 * M_PI * k / opt.phases);
          std::vector<std::complex<double>> w{r * dir, sign};
          double n = std::sqrt(std::norm(w[0]) + std::norm(w[1]));
          w[0] /= n;
          w[1] /= n;
          std::complex<double> a = n1.eval(w) / d1.eval(w);
          std::complex<double> b = n2.eval(w) / d2.eval(w);
          if (std::isfinite(std::abs(a)) && std::isfinite(std::abs(b))) ++finite;
          max2 = std::max(max2, std::abs(b));
          overall = std::max({overall, std::abs(a), std::abs(b)});
        }
      }
    }
    std::size_t expected = pts.size() + opt.radii.size() * opt.phases * 2;
    ok &= (finite == expected);
    ok &= (max2 <= 1.0 + 1e-12);
    if (si == 0) {
      c.witness("samples per seed", std::to_string(expected));
      c.witness("max |second coordinate|", fmt_double(max2) + " (bound 1 + 1e-12)");
      c.witness("overall coordinate bound", fmt_double(overall));
    }
    if (overall_prev >= 0.0)
      stable &= std::abs(overall - overall_prev) <= 0.01 * std::max(overall, overall_prev);
    overall_prev = overall;
  }
  ok &= stable;
  c.witness("overall bound stable across 3 seeds (1 percent)", stable ? "yes" : "NO");

  set_verdict(c, ok);
  return c;
}

// ---------------------------------------------------------------------------
// remark.cubic-model

ClaimResult verify_cubic_model(const VerifyOptions& opt) {
  ClaimResult c = make_claim(
      "remark.cubic-model",
      "the affine pieces (z1^3/z2, z2, 0) send the quadric into the cubic hypersurface "
      "{Im u3 + (Im u2)^3 = |u1 u2|^2} in C^3, which contains the line {u2 = u3 = 0} and is "
      "smooth (the y3-derivative of its defining function is 1)",
      ClaimMode::mixed);
  bool ok = true;

  auto [f1, f2] = cons::map_z_affine();
  RationalExpr prod = f1 * f2;
  bool cancel = prod.den().is_constant() && prod.den().constant_value() == ExactComplex(1);
  ok &= cancel;
  ok &= check_zero(c, "u1*u2 minus z1^3", prod.num() - pow(zvar(0), 3));

  // Composition of the cubic's defining function with the map: the u3 part
  // vanishes, Im u2 pulls back to Im z2, |u1 u2|^2 to |z1|^6.
  HermPoly h = pow(im_part(zvar(1)), 3) - modulus_squared(prod.num());
  c.witness("pullback of the defining function", h.str());

  // Restriction to the quadric via its graph z2 = Re z2 + i |z1|^2.
  HermPoly graph = re_part(zvar(1)) + ExactComplex::i() * modulus_squared(zvar(0));
  HermPoly restricted = h.substitute({herm(zvar(0)), graph});
  ok &= check_zero(c, "restriction to the quadric", restricted);

  HermPoly k = cons::cubic_model_k();
  {
    const VarList& uv = cons::uvars();
    HermPoly u1 = herm(HoloPoly::variable(uv, size_t(0)));
    HermPoly zero = HermPoly::zero(uv);
    ok &= check_zero(c, "defining function on the line {u2 = u3 = 0}",
                     k.substitute({u1, zero, zero}));
  }
  {
    // d/dy3 = i(d/du3 - d/d~u3).
    HermPoly dy3 = (k.d_z(2) - k.d_zbar(2)) * ExactComplex::i();
    HermPoly expect = HermPoly::constant(cons::uvars(), ExactComplex(1));
    ok &= check_zero(c, "y3-derivative minus 1", dy3 - expect);
  }

  // Numeric residuals of mapped quadric samples.
  {
    FloatHerm kf(k);
    double max_res = 0.0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < opt.sample_count; ++i) {
      SplitMix64 sub(SplitMix64::mix(opt.seed ^ 0x77, i));
      double x1 = sub.next_in(-1.5, 1.5), y1 = sub.next_in(-1.5, 1.5);
      double x2 = sub.next_in(-1.5, 1.5);
      std::complex<double> z1(x1, y1);
      std::complex<double> z2(x2, std::norm(z1));  // on the quadric by construction
      if (std::abs(z2) < 1e-3) continue;
      std::complex<double> u[3] = {z1 * z1 * z1 / z2, z2, 0.0};
      max_res = std::max(max_res, std::abs(kf.eval(u)));
      ++used;
    }
    ok &= (max_res <= opt.tol_residual) && used > opt.sample_count / 2;
    c.witness("mapped samples", std::to_string(used));
    c.witness("max |defining function| at mapped samples",
              fmt_double(max_res) + " (tolerance " + fmt_double(opt.tol_residual) + ")");
  }

  set_verdict(c, ok);
  return c;
}

// ---------------------------------------------------------------------------
// report plumbing

Report run_verification(const VerifyOptions& opt) {
  Report r;
  r.config.push_back({"seed", std::to_string(opt.seed)});
  std::string radii;
  for (double x : opt.radii) radii += (radii.empty() ? "" : ",") + fmt_double(x);
  r.config.push_back({"radii", radii});
  r.config.push_back({"phases", std::to_string(opt.phases)});
  r.config.push_back({"sample_count", std::to_string(opt.sample_count)});
  r.config.push_back({"cloud_count", std::to_string(opt.cloud_count)});
  r.config.push_back({"tol_residual", fmt_double(opt.tol_residual)});
  r.config.push_back({"tol_cluster", fmt_double(opt.tol_cluster)});
  r.config.push_back({"tol_hausdorff", fmt_double(opt.tol_hausdorff)});
  r.config.push_back({"window", fmt_double(opt.window)});
  r.config.push_back({"mode", opt.mode == ExecMode::serial ? "serial" : "parallel"});
  if (opt.only) r.config.push_back({"only", *opt.only});
  r.tower = cons::origin_tower().describe();

  auto want = [&](const std::string& id) {
    return !opt.only || id.rfind(*opt.only, 0) == 0 || opt.only->rfind(id, 0) == 0;
  };
  auto add = [&](const std::string& id, auto&& fn) {
    if (!want(id)) return;
    try {
      r.claims.push_back(fn());
    } catch (const std::exception& e) {
      ClaimResult c = make_claim(id, "claim evaluation", ClaimMode::mixed);
      c.witness("exception", e.what());
      set_verdict(c, false);
      r.claims.push_back(std::move(c));
    }
  };

  add("construction.identities", [] { return verify_construction_identities(); });
  add("i.indeterminacy", [] { return verify_indeterminacy(); });
  add("i.cluster.p-", [&] { return verify_cluster_singleton(false, opt); });
  add("i.cluster.p+", [&] { return verify_cluster_singleton(true, opt); });

  bool want_tower = want("ii.tower.p-") || want("ii.tower.p+");
  if (want_tower) {
    try {
      ZModelAnalysis a = analyze_z_model(opt);
      if (want("ii.tower.p-")) r.claims.push_back(tower_claim(false, opt, a));
      if (want("ii.tower.p+")) r.claims.push_back(tower_claim(true, opt, a));
    } catch (const std::exception& e) {
      ClaimResult c = make_claim("ii.tower", "tower analysis", ClaimMode::mixed);
      c.witness("exception", e.what());
      set_verdict(c, false);
      r.claims.push_back(std::move(c));
    }
  }

  add("iii.line-avoidance", [&] { return verify_line_avoidance(opt); });
  add("iii.affine-form", [] { return verify_affine_form(); });
  add("iii.affine-containment", [&] { return verify_affine_containment(opt); });
  add("remark.cubic-model", [&] { return verify_cubic_model(opt); });
  return r;
}

bool Report::all_pass() const {
  for (const auto& c : claims)
    if (!c.passed()) return false;
  return !claims.empty();
}

namespace {

void claim_text(const ClaimResult& c, int indent, std::string& out) {
  std::string pad(indent, ' ');
  out += pad + "[" + verdict_str(c.verdict) + "] " + c.claim_id + " (" +
         claim_mode_str(c.mode) + ")\n";
  out += pad + "    " + c.statement + "\n";
  for (const auto& w : c.witnesses) out += pad + "    " + w.key + " = " + w.value + "\n";
  for (const auto& s : c.sub) claim_text(s, indent + 2, out);
}

}  // namespace

std::string report_text(const Report& r) {
  std::string out;
  out += "verification report\n";
  out += "===================\n";
  out += "config:\n";
  for (const auto& [k, v] : r.config) out += "  " + k + " = " + v + "\n";
  out += "tower:\n";
  for (size_t pos = 0, next; pos < r.tower.size(); pos = next) {
    next = r.tower.find('\n', pos);
    next = (next == std::string::npos) ? r.tower.size() : next + 1;
    out += "  " + r.tower.substr(pos, next - pos);
  }
  out += "claims:\n";
  std::size_t passed = 0;
  for (const auto& c : r.claims) {
    claim_text(c, 0, out);
    if (c.passed()) ++passed;
  }
  out += "summary: " + std::to_string(passed) + "/" + std::to_string(r.claims.size()) +
         " claims passed\n";
  return out;
}

namespace {

nlohmann::ordered_json claim_json(const ClaimResult& c) {
  nlohmann::ordered_json j;
  j["id"] = c.claim_id;
  j["statement"] = c.statement;
  j["mode"] = claim_mode_str(c.mode);
  j["verdict"] = verdict_str(c.verdict);
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : c.witnesses) j["witnesses"].push_back({{"key", w.key}, {"value", w.value}});
  j["sub"] = nlohmann::ordered_json::array();
  for (const auto& s : c.sub) j["sub"].push_back(claim_json(s));
  return j;
}

ClaimResult claim_from_json(const nlohmann::json& j) {
  ClaimResult c;
  c.claim_id = j.at("id").get<std::string>();
  c.statement = j.at("statement").get<std::string>();
  std::string m = j.at("mode").get<std::string>();
  c.mode = m == "symbolic" ? ClaimMode::symbolic
                           : (m == "numeric" ? ClaimMode::numeric : ClaimMode::mixed);
  c.verdict = j.at("verdict").get<std::string>() == "PASS" ? Verdict::pass : Verdict::fail;
  for (const auto& w : j.at("witnesses"))
    c.witnesses.push_back({w.at("key").get<std::string>(), w.at("value").get<std::string>()});
  for (const auto& s : j.at("sub")) c.sub.push_back(claim_from_json(s));
  return c;
}

}  // namespace

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["config"] = nlohmann::ordered_json::array();
  for (const auto& [k, v] : r.config) j["config"].push_back({{"key", k}, {"value", v}});
  j["tower"] = r.tower;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : r.claims) j["claims"].push_back(claim_json(c));
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Report r;
  for (const auto& e : j.at("config"))
    r.config.push_back({e.at("key").get<std::string>(), e.at("value").get<std::string>()});
  r.tower = j.at("tower").get<std::string>();
  for (const auto& c : j.at("claims")) r.claims.push_back(claim_from_json(c));
  return r;
}

}  // namespace crgeo
