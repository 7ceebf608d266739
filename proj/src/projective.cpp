#include "crgeo/projective.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "crgeo/roots.hpp"

namespace crgeo {

Mat3 identity3() {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = ExactComplex(i == j ? 1 : 0);
  return m;
}

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ExactComplex acc(0);
      for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      m[i][j] = acc;
    }
  return m;
}

ExactComplex det3(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 inverse3(const Mat3& a) {
  ExactComplex d = det3(a);
  if (d.is_zero()) throw std::invalid_argument("inverse3: singular matrix");
  Mat3 m{};
  auto cof = [&](int r0, int c0, int r1, int c1) { return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]; };
  m[0][0] = cof(1, 1, 2, 2) / d;
  m[0][1] = (ExactComplex(-1) * cof(0, 1, 2, 2)) / d;
  m[0][2] = cof(0, 1, 1, 2) / d;
  m[1][0] = (ExactComplex(-1) * cof(1, 0, 2, 2)) / d;
  m[1][1] = cof(0, 0, 2, 2) / d;
  m[1][2] = (ExactComplex(-1) * cof(0, 0, 1, 2)) / d;
  m[2][0] = cof(1, 0, 2, 1) / d;
  m[2][1] = (ExactComplex(-1) * cof(0, 0, 2, 1)) / d;
  m[2][2] = cof(0, 0, 1, 1) / d;
  return m;
}

ProjectivePoint ProjectivePoint::of(const ExactComplex& a, const ExactComplex& b,
                                    const ExactComplex& c) {
  std::array<ExactComplex, 3> h{a, b, c};
  for (auto& v : h) {
    if (!v.is_zero()) {
      ExactComplex scale = ExactComplex(1) / v;
      for (auto& w : h) w *= scale;
      return ProjectivePoint{h};
    }
  }
  throw std::invalid_argument("ProjectivePoint: all coordinates zero");
}

std::string ProjectivePoint::str() const {
  return "[" + h[0].str() + " : " + h[1].str() + " : " + h[2].str() + "]";
}

ProjectiveTriple::ProjectiveTriple(std::array<HoloPoly, 3> comps,
                                   const std::vector<HoloPoly>& clear_factors)
    : c_(std::move(comps)) {
  check_same_vars(c_[0].vars(), c_[1].vars(), "ProjectiveTriple");
  check_same_vars(c_[0].vars(), c_[2].vars(), "ProjectiveTriple");
  if (c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero())
    throw std::invalid_argument("ProjectiveTriple: all components are zero");

  // Common monomial factor.
  Exps common(c_[0].nvars(), ~0u);
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    Exps m = c.factor_out_monomial().first;
    for (size_t i = 0; i < common.size(); ++i) common[i] = std::min(common[i], m[i]);
  }
  bool nontrivial = false;
  for (auto e : common) nontrivial = nontrivial || (e > 0 && e != ~0u);
  if (nontrivial) {
    for (auto& c : c_)
      if (!c.is_zero()) c = c.divide_monomial(common);
    HoloPoly mono = HoloPoly::monomial(c_[0].vars(), common, ExactComplex(1));
    cleared_.push_back(mono);
  }

  // Supplied factors, by exhaustive trial division.
  for (const auto& f : clear_factors) {
    if (f.is_constant()) continue;
    while (true) {
      std::array<std::optional<HoloPoly>, 3> q;
      bool all = true;
      for (int i = 0; i < 3 && all; ++i) {
        if (c_[i].is_zero()) {
          q[i] = c_[i];
          continue;
        }
        q[i] = c_[i].try_divide(f);
        all = q[i].has_value();
      }
      if (!all) break;
      for (int i = 0; i < 3; ++i) c_[i] = *q[i];
      cleared_.push_back(f);
    }
  }

  // Canonical scale: leading coefficient 1 on the first nonzero component,
  // so projectively equal normalized triples compare equal.
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    ExactComplex lead = c.terms().rbegin()->second;
    if (!(lead == ExactComplex(1))) {
      ExactComplex inv = ExactComplex(1) / lead;
      for (auto& comp : c_) comp = comp * inv;
    }
    break;
  }
}

ProjectiveTriple ProjectiveTriple::raw(std::array<HoloPoly, 3> comps,
                                       std::vector<HoloPoly> cleared) {
  check_same_vars(comps[0].vars(), comps[1].vars(), "ProjectiveTriple::raw");
  check_same_vars(comps[0].vars(), comps[2].vars(), "ProjectiveTriple::raw");
  if (comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero())
    throw std::invalid_argument("ProjectiveTriple: all components are zero");
  ProjectiveTriple t;
  t.c_ = std::move(comps);
  t.cleared_ = std::move(cleared);
  return t;
}

std::optional<ProjectivePoint> ProjectiveTriple::eval(
    const std::vector<ExactComplex>& point) const {
  ExactComplex a = c_[0].eval(point), b = c_[1].eval(point), c = c_[2].eval(point);
  if (a.is_zero() && b.is_zero() && c.is_zero()) return std::nullopt;
  return ProjectivePoint::of(a, b, c);
}

std::array<std::complex<double>, 3> ProjectiveTriple::eval(
    const std::vector<std::complex<double>>& point) const {
  return {c_[0].eval(point), c_[1].eval(point), c_[2].eval(point)};
}

std::string ProjectiveTriple::str() const {
  return "[" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + "]";
}

ProjectiveTriple homogenize(const RationalExpr& f1, const RationalExpr& f2) {
  check_same_vars(f1.vars(), f2.vars(), "homogenize");
  std::array<HoloPoly, 3> c{f1.num() * f2.den(), f2.num() * f1.den(), f1.den() * f2.den()};
  return ProjectiveTriple(std::move(c), {f1.den(), f2.den()});
}

std::pair<RationalExpr, RationalExpr> dehomogenize(const ProjectiveTriple& f, size_t den_index) {
  if (den_index > 2) throw std::invalid_argument("dehomogenize: bad component index");
  const auto& c = f.components();
  if (c[den_index].is_zero())
    throw std::invalid_argument("dehomogenize: chosen denominator component is zero");
  std::vector<size_t> rest;
  for (size_t i = 0; i < 3; ++i)
    if (i != den_index) rest.push_back(i);
  return {RationalExpr(c[rest[0]], c[den_index]), RationalExpr(c[rest[1]], c[den_index])};
}

ProjectiveTriple compose_source(const ProjectiveTriple& f, const RationalExpr& r1,
                                const RationalExpr& r2) {
  if (f.vars().size() != 2)
    throw std::invalid_argument("compose_source: triple must have two source variables");
  check_same_vars(r1.vars(), r2.vars(), "compose_source");
  const VarList& tv = r1.vars();

  unsigned deg = 0;
  for (const auto& c : f.components()) deg = std::max(deg, unsigned(std::max(c.degree(), 0)));

  // c(r1, r2) * (den1 * den2)^deg, expanded term by term so every power is a
  // polynomial: n1^a d1^(deg-a) n2^b d2^(deg-b).
  std::vector<HoloPoly> pn1{HoloPoly::constant(tv, ExactComplex(1))};
  std::vector<HoloPoly> pd1{HoloPoly::constant(tv, ExactComplex(1))};
  std::vector<HoloPoly> pn2{HoloPoly::constant(tv, ExactComplex(1))};
  std::vector<HoloPoly> pd2{HoloPoly::constant(tv, ExactComplex(1))};
  for (unsigned k = 1; k <= deg; ++k) {
    pn1.push_back(pn1.back() * r1.num());
    pd1.push_back(pd1.back() * r1.den());
    pn2.push_back(pn2.back() * r2.num());
    pd2.push_back(pd2.back() * r2.den());
  }

  std::array<HoloPoly, 3> out{HoloPoly(tv), HoloPoly(tv), HoloPoly(tv)};
  for (int i = 0; i < 3; ++i) {
    HoloPoly acc(tv);
    for (const auto& [e, coef] : f.components()[i].terms()) {
      unsigned a = e[0], b = e[1];
      acc += HoloPoly::constant(tv, coef) * pn1[a] * pd1[deg - a] * pn2[b] * pd2[deg - b];
    }
    out[i] = acc;
  }
  return ProjectiveTriple(std::move(out), {r1.den(), r2.den()});
}

ProjectiveTriple compose_target(const ProjectiveTriple& f, const Mat3& a) {
  if (det3(a).is_zero()) throw std::invalid_argument("compose_target: singular matrix");
  const auto& c = f.components();
  std::array<HoloPoly, 3> out{HoloPoly(f.vars()), HoloPoly(f.vars()), HoloPoly(f.vars())};
  for (int i = 0; i < 3; ++i) {
    HoloPoly acc(f.vars());
    for (int j = 0; j < 3; ++j) acc += c[j] * a[i][j];
    out[i] = acc;
  }
  return ProjectiveTriple::raw(std::move(out), f.cleared_factors());
}

namespace {

std::string approx_str(const std::vector<std::complex<double>>& zs) {
  std::string s;
  char buf[64];
  for (const auto& z : zs) {
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
    if (!s.empty()) s += ", ";
    s += buf;
  }
  return s;
}

}  // namespace

BaseLocus base_locus(const ProjectiveTriple& f) {
  if (f.vars().size() != 2)
    throw std::invalid_argument("base_locus: triple must have two source variables");
  BaseLocus out;
  const auto& c = f.components();

  for (const auto& ci : c) {
    if (!ci.is_zero() && ci.is_constant()) {
      out.certified_finite = true;  // a unit component: no common zeros at all
      return out;
    }
  }

  // Candidate values for the second coordinate: roots of a nonzero pairwise
  // resultant eliminating the first coordinate. A common zero of the triple
  // is a common zero of every pair, so any single nonzero resultant bounds
  // the candidate set.
  bool all_defined_zero = true;
  std::optional<UniRootResult> cand;
  for (int i = 0; i < 3 && !cand; ++i) {
    for (int j = i + 1; j < 3 && !cand; ++j) {
      if (c[i].is_zero() || c[j].is_zero()) continue;
      if (c[i].degree_in(0) == 0 && c[j].degree_in(0) == 0) continue;
      HoloPoly r = resultant(c[i], c[j], 0);
      if (r.is_zero()) continue;
      all_defined_zero = false;
      if (r.is_constant()) {
        out.certified_finite = true;  // this pair has no common zero anywhere
        return out;
      }
      cand = exact_roots(r, 1);
    }
  }
  if (!cand) {
    if (all_defined_zero) {
      out.notes.push_back(
          "every pairwise resultant vanishes identically: a common curve remains, "
          "the triple is not normalized");
    } else {
      out.notes.push_back("no resultant available to bound the base locus");
    }
    return out;
  }

  bool complete = cand->complete;
  if (!cand->unresolved.empty())
    out.notes.push_back("second-coordinate candidates not split over Q(i); leftover roots near " +
                        approx_str(cand->unresolved));

  for (const auto& [y, mult] : cand->exact) {
    // Specialize the triple at second coordinate = y.
    std::vector<HoloPoly> images{HoloPoly::variable(f.vars(), size_t(0)),
                                 HoloPoly::constant(f.vars(), y)};
    std::array<HoloPoly, 3> spec{c[0].substitute(images), c[1].substitute(images),
                                 c[2].substitute(images)};
    if (spec[0].is_zero() && spec[1].is_zero() && spec[2].is_zero()) {
      out.notes.push_back("the whole line {second coordinate = " + y.str() +
                          "} lies in the base locus");
      complete = false;
      continue;
    }
    const HoloPoly* first = nullptr;
    for (const auto& s : spec) {
      if (!s.is_zero()) {
        first = &s;
        break;
      }
    }
    if (first->is_constant()) continue;  // no zeros on this line
    if (first->degree_in(0) == 0) continue;  // nonzero constant in x after specialization
    UniRootResult xr = exact_roots(*first, 0);
    if (!xr.complete) {
      complete = false;
      out.notes.push_back("first-coordinate roots not split over Q(i) at second coordinate " +
                          y.str() + "; leftover near " + approx_str(xr.unresolved));
    }
    for (const auto& [x, xmult] : xr.exact) {
      std::vector<ExactComplex> pt{x, y};
      if (c[0].eval(pt).is_zero() && c[1].eval(pt).is_zero() && c[2].eval(pt).is_zero())
        out.points.push_back(ExactPoint2{x, y});
    }
  }

  std::sort(out.points.begin(), out.points.end(), [](const ExactPoint2& a, const ExactPoint2& b) {
    if (!(a.x == b.x)) return exact_less(a.x, b.x);
    return exact_less(a.y, b.y);
  });
  out.certified_finite = complete;
  return out;
}

PoleDivisor pole_divisor(const ProjectiveTriple& f, size_t den_index) {
  if (den_index > 2) throw std::invalid_argument("pole_divisor: bad component index");
  return PoleDivisor{den_index, f.components()[den_index], f.cleared_factors()};
}

ProjectiveTriple lift(const ProjectiveTriple& f, const BlowupTower& tower,
                      const std::string& chart_id) {
  auto bd = tower.total_blow_down(chart_id);
  std::vector<HoloPoly> images{bd[0], bd[1]};
  std::array<HoloPoly, 3> c{f.components()[0].substitute(images),
                            f.components()[1].substitute(images),
                            f.components()[2].substitute(images)};
  std::vector<HoloPoly> cleared;
  const VarList& vars = tower.chart(chart_id).vars;
  for (size_t e : tower.exceptional_coords(chart_id)) {
    unsigned m = ~0u;
    for (const auto& comp : c) {
      if (comp.is_zero()) continue;
      unsigned cm = ~0u;
      for (const auto& [exps, coef] : comp.terms()) cm = std::min(cm, exps[e]);
      m = std::min(m, cm);
    }
    if (m == 0 || m == ~0u) continue;
    Exps strip(vars.size(), 0);
    strip[e] = m;
    for (auto& comp : c)
      if (!comp.is_zero()) comp = comp.divide_monomial(strip);
    cleared.push_back(HoloPoly::monomial(vars, strip, ExactComplex(1)));
  }
  return ProjectiveTriple::raw(std::move(c), std::move(cleared));
}

ProjectiveTriple restrict_to_coordinate(const ProjectiveTriple& f, size_t var) {
  std::vector<HoloPoly> images;
  for (size_t i = 0; i < f.vars().size(); ++i) {
    images.push_back(i == var ? HoloPoly(f.vars()) : HoloPoly::variable(f.vars(), i));
  }
  std::array<HoloPoly, 3> c{f.components()[0].substitute(images),
                            f.components()[1].substitute(images),
                            f.components()[2].substitute(images)};
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
    throw std::domain_error("restrict_to_coordinate: triple vanishes identically on the curve");
  return ProjectiveTriple::raw(std::move(c));
}

ConstancyResult is_constant(const ProjectiveTriple& f) {
  // Identify the (at most one) variable actually present.
  std::optional<size_t> active;
  for (size_t i = 0; i < f.vars().size(); ++i) {
    if (std::max(f.components()[0].degree_in(i),
                 std::max(f.components()[1].degree_in(i), f.components()[2].degree_in(i))) > 0) {
      if (active)
        throw std::invalid_argument("is_constant: triple depends on more than one variable");
      active = i;
    }
  }
  ConstancyResult res;
  if (!active) {
    res.constant = true;
    res.value = ProjectivePoint::of(f.components()[0].constant_value(),
                                    f.components()[1].constant_value(),
                                    f.components()[2].constant_value());
    return res;
  }

  const auto& c = f.components();
  std::array<HoloPoly, 3> d{c[0].derivative(*active), c[1].derivative(*active),
                            c[2].derivative(*active)};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!(c[i] * d[j] - c[j] * d[i]).is_zero()) {
        res.constant = false;
        return res;
      }
    }
  }
  res.constant = true;
  // All minors vanish: evaluate anywhere the triple is nonzero.
  for (long t = 0;; ++t) {
    std::vector<ExactComplex> pt(f.vars().size(), ExactComplex(0));
    pt[*active] = ExactComplex(t);
    auto v = f.eval(pt);
    if (v) {
      res.value = *v;
      return res;
    }
  }
}

double chart_distance(const std::array<std::complex<double>, 3>& p,
                      const ProjectivePoint& target) {
  size_t k = 0;
  double best = -1.0;
  for (size_t i = 0; i < 3; ++i) {
    double a = std::abs(target.h[i].to_complex());
    if (a > best) {
      best = a;
      k = i;
    }
  }
  if (std::abs(p[k]) == 0.0) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (size_t i = 0; i < 3; ++i) {
    if (i == k) continue;
    std::complex<double> affine = p[i] / p[k];
    std::complex<double> taffine = target.h[i].to_complex() / target.h[k].to_complex();
    d = std::max(d, std::abs(affine - taffine));
  }
  return d;
}

}  // namespace crgeo
