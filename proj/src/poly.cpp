#include "crgeo/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crgeo {

namespace {

unsigned total(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::complex<double> cpow(const std::complex<double>& z, unsigned e) {
  std::complex<double> out(1.0, 0.0);
  for (unsigned k = 0; k < e; ++k) out *= z;
  return out;
}

}  // namespace

std::string varlist_str(const VarList& vars) {
  std::string s = "[";
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += vars[i];
  }
  return s + "]";
}

void check_same_vars(const VarList& a, const VarList& b, const char* where) {
  if (a != b) {
    throw std::invalid_argument(std::string(where) + ": variable lists differ: " +
                                varlist_str(a) + " vs " + varlist_str(b));
  }
}

bool GradedLex::operator()(const Exps& a, const Exps& b) const {
  unsigned ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool PairGradedLex::operator()(const PairExps& a, const PairExps& b) const {
  unsigned ta = total(a.hol) + total(a.anti);
  unsigned tb = total(b.hol) + total(b.anti);
  if (ta != tb) return ta < tb;
  if (a.hol != b.hol)
    return std::lexicographical_compare(a.hol.begin(), a.hol.end(), b.hol.begin(), b.hol.end());
  return std::lexicographical_compare(a.anti.begin(), a.anti.end(), b.anti.begin(), b.anti.end());
}

// ---------------------------------------------------------------------------
// HoloPoly

HoloPoly HoloPoly::constant(VarList vars, const ExactComplex& c) {
  HoloPoly p(std::move(vars));
  p.add_term(Exps(p.nvars(), 0), c);
  return p;
}

HoloPoly HoloPoly::variable(VarList vars, size_t index) {
  HoloPoly p(std::move(vars));
  if (index >= p.nvars()) throw std::invalid_argument("HoloPoly::variable: index out of range");
  Exps e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, ExactComplex(1));
  return p;
}

HoloPoly HoloPoly::variable(VarList vars, const std::string& name) {
  HoloPoly probe(vars);
  return variable(std::move(vars), probe.var_index(name));
}

HoloPoly HoloPoly::monomial(VarList vars, Exps exps, const ExactComplex& c) {
  HoloPoly p(std::move(vars));
  if (exps.size() != p.nvars()) throw std::invalid_argument("HoloPoly::monomial: bad exponents");
  p.add_term(exps, c);
  return p;
}

size_t HoloPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  throw std::invalid_argument("unknown variable '" + name + "' in " + varlist_str(vars_));
}

bool HoloPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total(terms_.begin()->first) == 0;
}

ExactComplex HoloPoly::constant_value() const {
  if (terms_.empty()) return ExactComplex(0);
  if (!is_constant()) throw std::logic_error("HoloPoly::constant_value: not constant");
  return terms_.begin()->second;
}

ExactComplex HoloPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactComplex(0) : it->second;
}

int HoloPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total(terms_.rbegin()->first));
}

int HoloPoly::degree_in(size_t var) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return static_cast<int>(d);
}

void HoloPoly::add_term(const Exps& e, const ExactComplex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HoloPoly& HoloPoly::operator+=(const HoloPoly& o) {
  check_same_vars(vars_, o.vars_, "HoloPoly::operator+");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HoloPoly& HoloPoly::operator-=(const HoloPoly& o) {
  check_same_vars(vars_, o.vars_, "HoloPoly::operator-");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HoloPoly operator*(const HoloPoly& a, const HoloPoly& b) {
  check_same_vars(a.vars_, b.vars_, "HoloPoly::operator*");
  HoloPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exps e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

HoloPoly operator*(const HoloPoly& a, const ExactComplex& c) {
  HoloPoly out(a.vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, k] : a.terms_) out.terms_.emplace(e, k * c);
  return out;
}

ExactComplex HoloPoly::eval(const std::vector<ExactComplex>& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("HoloPoly::eval: wrong point size");
  ExactComplex acc(0);
  for (const auto& [e, c] : terms_) {
    ExactComplex t = c;
    for (size_t i = 0; i < e.size(); ++i) t *= pow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

std::complex<double> HoloPoly::eval(const std::vector<std::complex<double>>& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("HoloPoly::eval: wrong point size");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (size_t i = 0; i < e.size(); ++i) t *= cpow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

HoloPoly HoloPoly::substitute(const std::vector<HoloPoly>& images) const {
  if (images.size() != nvars())
    throw std::invalid_argument("HoloPoly::substitute: need one image per variable of " +
                                varlist_str(vars_));
  for (const auto& im : images)
    check_same_vars(images.front().vars(), im.vars(), "HoloPoly::substitute");
  const VarList& tv = images.empty() ? vars_ : images.front().vars();

  // Precompute image powers up to the largest exponent actually used.
  std::vector<std::vector<HoloPoly>> pw(nvars());
  for (size_t i = 0; i < nvars(); ++i) {
    unsigned maxe = 0;
    for (const auto& [e, c] : terms_) maxe = std::max(maxe, e[i]);
    pw[i].reserve(maxe + 1);
    pw[i].push_back(HoloPoly::constant(tv, ExactComplex(1)));
    for (unsigned k = 1; k <= maxe; ++k) pw[i].push_back(pw[i].back() * images[i]);
  }

  HoloPoly out(tv);
  for (const auto& [e, c] : terms_) {
    HoloPoly t = HoloPoly::constant(tv, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * pw[i][e[i]];
    out += t;
  }
  return out;
}

HoloPoly HoloPoly::substitute(const std::map<std::string, HoloPoly>& bindings) const {
  std::vector<HoloPoly> images;
  images.reserve(nvars());
  for (const auto& name : vars_) {
    auto it = bindings.find(name);
    if (it == bindings.end())
      throw std::invalid_argument("HoloPoly::substitute: missing binding for variable '" + name +
                                  "' of " + varlist_str(vars_));
    images.push_back(it->second);
  }
  return substitute(images);
}

HoloPoly HoloPoly::derivative(size_t var) const {
  HoloPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exps e2 = e;
    e2[var] -= 1;
    out.add_term(e2, c * ExactComplex(static_cast<long>(e[var])));
  }
  return out;
}

std::pair<Exps, HoloPoly> HoloPoly::factor_out_monomial() const {
  if (terms_.empty()) return {Exps(nvars(), 0), *this};
  Exps m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return {m, divide_monomial(m)};
}

HoloPoly HoloPoly::divide_monomial(const Exps& m) const {
  HoloPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exps e2(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < m[i]) throw std::domain_error("HoloPoly::divide_monomial: not divisible");
      e2[i] = e[i] - m[i];
    }
    out.terms_.emplace(e2, c);
  }
  return out;
}

std::optional<HoloPoly> HoloPoly::try_divide(const HoloPoly& divisor) const {
  check_same_vars(vars_, divisor.vars_, "HoloPoly::try_divide");
  if (divisor.is_zero()) throw std::invalid_argument("HoloPoly::try_divide: zero divisor");
  HoloPoly q(vars_);
  HoloPoly r = *this;
  const auto& dl = *divisor.terms_.rbegin();  // graded-lex leading term
  while (!r.is_zero()) {
    const auto& rl = *r.terms_.rbegin();
    Exps e(rl.first.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (rl.first[i] < dl.first[i]) return std::nullopt;
      e[i] = rl.first[i] - dl.first[i];
    }
    HoloPoly t = HoloPoly::monomial(vars_, e, rl.second / dl.second);
    q += t;
    r -= t * divisor;
  }
  return q;
}

HoloPoly HoloPoly::divide_exact(const HoloPoly& divisor) const {
  auto q = try_divide(divisor);
  if (!q) throw std::domain_error("HoloPoly::divide_exact: division leaves a remainder");
  return *q;
}

std::vector<HoloPoly> HoloPoly::coeffs_in(size_t var) const {
  int d = degree_in(var);
  std::vector<HoloPoly> out(static_cast<size_t>(std::max(d, 0)) + 1, HoloPoly(vars_));
  for (const auto& [e, c] : terms_) {
    Exps e2 = e;
    e2[var] = 0;
    out[e[var]].add_term(e2, c);
  }
  return out;
}

std::string HoloPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.str() + ")";
    for (size_t i = 0; i < it->first.size(); ++i)
      if (it->first[i] > 0) s += "*" + vars_[i] + "^" + std::to_string(it->first[i]);
  }
  return s;
}

HoloPoly pow(const HoloPoly& base, unsigned exp) {
  HoloPoly out = HoloPoly::constant(base.vars(), ExactComplex(1));
  for (unsigned k = 0; k < exp; ++k) out = out * base;
  return out;
}

namespace {

HoloPoly det(const std::vector<std::vector<HoloPoly>>& m, const VarList& vars) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  HoloPoly acc(vars);
  for (size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<HoloPoly>> sub;
    sub.reserve(n - 1);
    for (size_t r = 1; r < n; ++r) {
      std::vector<HoloPoly> row;
      row.reserve(n - 1);
      for (size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    HoloPoly term = m[0][col] * det(sub, vars);
    if (col % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace

HoloPoly resultant(const HoloPoly& p, const HoloPoly& q, size_t var) {
  check_same_vars(p.vars(), q.vars(), "resultant");
  int dp = p.degree_in(var), dq = q.degree_in(var);
  if (dp < 0 || dq < 0) throw std::invalid_argument("resultant: zero polynomial argument");
  if (dp == 0 && dq == 0)
    throw std::invalid_argument("resultant: both arguments constant in the elimination variable");
  if (dp == 0) return pow(p, static_cast<unsigned>(dq));
  if (dq == 0) return pow(q, static_cast<unsigned>(dp));

  auto cp = p.coeffs_in(var);
  auto cq = q.coeffs_in(var);
  size_t n = static_cast<size_t>(dp + dq);
  std::vector<std::vector<HoloPoly>> m(n, std::vector<HoloPoly>(n, HoloPoly(p.vars())));
  for (int i = 0; i < dq; ++i)
    for (int j = 0; j <= dp; ++j) m[i][i + j] = cp[dp - j];
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j <= dq; ++j) m[dq + i][i + j] = cq[dq - j];
  return det(m, p.vars());
}

// ---------------------------------------------------------------------------
// HermPoly

HermPoly HermPoly::constant(VarList vars, const ExactComplex& c) {
  HermPoly p(std::move(vars));
  p.add_term({Exps(p.nvars(), 0), Exps(p.nvars(), 0)}, c);
  return p;
}

bool HermPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total(terms_.begin()->first.hol) == 0 &&
         total(terms_.begin()->first.anti) == 0;
}

ExactComplex HermPoly::constant_value() const {
  if (terms_.empty()) return ExactComplex(0);
  if (!is_constant()) throw std::logic_error("HermPoly::constant_value: not constant");
  return terms_.begin()->second;
}

ExactComplex HermPoly::coeff(const PairExps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactComplex(0) : it->second;
}

int HermPoly::degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return static_cast<int>(total(e.hol) + total(e.anti));
}

bool HermPoly::is_real_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (coeff({e.anti, e.hol}) != c.conj()) return false;
  }
  return true;
}

void HermPoly::add_term(const PairExps& e, const ExactComplex& c) {
  if (c.is_zero()) return;
  if (e.hol.size() != nvars() || e.anti.size() != nvars())
    throw std::invalid_argument("HermPoly::add_term: bad exponent length");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HermPoly& HermPoly::operator+=(const HermPoly& o) {
  check_same_vars(vars_, o.vars_, "HermPoly::operator+");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HermPoly& HermPoly::operator-=(const HermPoly& o) {
  check_same_vars(vars_, o.vars_, "HermPoly::operator-");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HermPoly operator*(const HermPoly& a, const HermPoly& b) {
  check_same_vars(a.vars_, b.vars_, "HermPoly::operator*");
  HermPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      PairExps e{Exps(ea.hol.size()), Exps(ea.anti.size())};
      for (size_t i = 0; i < e.hol.size(); ++i) {
        e.hol[i] = ea.hol[i] + eb.hol[i];
        e.anti[i] = ea.anti[i] + eb.anti[i];
      }
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

HermPoly operator*(const HermPoly& a, const ExactComplex& c) {
  HermPoly out(a.vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, k] : a.terms_) out.terms_.emplace(e, k * c);
  return out;
}

HermPoly HermPoly::conj() const {
  HermPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(PairExps{e.anti, e.hol}, c.conj());
  return out;
}

ExactComplex HermPoly::eval(const std::vector<ExactComplex>& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("HermPoly::eval: wrong point size");
  ExactComplex acc(0);
  for (const auto& [e, c] : terms_) {
    ExactComplex t = c;
    for (size_t i = 0; i < nvars(); ++i) {
      t *= pow(point[i], e.hol[i]);
      t *= pow(point[i].conj(), e.anti[i]);
    }
    acc += t;
  }
  return acc;
}

std::complex<double> HermPoly::eval(const std::vector<std::complex<double>>& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("HermPoly::eval: wrong point size");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (size_t i = 0; i < nvars(); ++i) {
      t *= cpow(point[i], e.hol[i]);
      t *= cpow(std::conj(point[i]), e.anti[i]);
    }
    acc += t;
  }
  return acc;
}

HermPoly HermPoly::substitute(const std::vector<HermPoly>& images) const {
  if (images.size() != nvars())
    throw std::invalid_argument("HermPoly::substitute: need one image per variable of " +
                                varlist_str(vars_));
  for (const auto& im : images)
    check_same_vars(images.front().vars(), im.vars(), "HermPoly::substitute");
  const VarList& tv = images.empty() ? vars_ : images.front().vars();

  std::vector<std::vector<HermPoly>> pwh(nvars()), pwa(nvars());
  for (size_t i = 0; i < nvars(); ++i) {
    unsigned mh = 0, ma = 0;
    for (const auto& [e, c] : terms_) {
      mh = std::max(mh, e.hol[i]);
      ma = std::max(ma, e.anti[i]);
    }
    pwh[i].push_back(HermPoly::constant(tv, ExactComplex(1)));
    for (unsigned k = 1; k <= mh; ++k) pwh[i].push_back(pwh[i].back() * images[i]);
    pwa[i].push_back(HermPoly::constant(tv, ExactComplex(1)));
    HermPoly ic = images[i].conj();
    for (unsigned k = 1; k <= ma; ++k) pwa[i].push_back(pwa[i].back() * ic);
  }

  HermPoly out(tv);
  for (const auto& [e, c] : terms_) {
    HermPoly t = HermPoly::constant(tv, c);
    for (size_t i = 0; i < nvars(); ++i) {
      if (e.hol[i] > 0) t = t * pwh[i][e.hol[i]];
      if (e.anti[i] > 0) t = t * pwa[i][e.anti[i]];
    }
    out += t;
  }
  return out;
}

HermPoly HermPoly::d_z(size_t var) const {
  HermPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.hol[var] == 0) continue;
    PairExps e2 = e;
    e2.hol[var] -= 1;
    out.add_term(e2, c * ExactComplex(static_cast<long>(e.hol[var])));
  }
  return out;
}

HermPoly HermPoly::d_zbar(size_t var) const {
  HermPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.anti[var] == 0) continue;
    PairExps e2 = e;
    e2.anti[var] -= 1;
    out.add_term(e2, c * ExactComplex(static_cast<long>(e.anti[var])));
  }
  return out;
}

std::pair<PairExps, HermPoly> HermPoly::factor_out_monomial() const {
  PairExps m{Exps(nvars(), 0), Exps(nvars(), 0)};
  if (terms_.empty()) return {m, *this};
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < nvars(); ++i) {
      m.hol[i] = std::min(m.hol[i], e.hol[i]);
      m.anti[i] = std::min(m.anti[i], e.anti[i]);
    }
  }
  return {m, divide_monomial(m)};
}

HermPoly HermPoly::divide_monomial(const PairExps& m) const {
  HermPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    PairExps e2{Exps(nvars()), Exps(nvars())};
    for (size_t i = 0; i < nvars(); ++i) {
      if (e.hol[i] < m.hol[i] || e.anti[i] < m.anti[i])
        throw std::domain_error("HermPoly::divide_monomial: not divisible");
      e2.hol[i] = e.hol[i] - m.hol[i];
      e2.anti[i] = e.anti[i] - m.anti[i];
    }
    out.terms_.emplace(e2, c);
  }
  return out;
}

unsigned HermPoly::modulus_reduction_power(size_t var) const {
  if (terms_.empty()) return 0;
  unsigned k = ~0u;
  for (const auto& [e, c] : terms_) k = std::min(k, std::max(e.hol[var], e.anti[var]));
  return k;
}

unsigned HermPoly::modulus_divisible_power(size_t var) const {
  if (terms_.empty()) return 0;
  unsigned k = ~0u;
  for (const auto& [e, c] : terms_) k = std::min(k, std::min(e.hol[var], e.anti[var]));
  return k;
}

std::string HermPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.str() + ")";
    for (size_t i = 0; i < nvars(); ++i)
      if (it->first.hol[i] > 0) s += "*" + vars_[i] + "^" + std::to_string(it->first.hol[i]);
    for (size_t i = 0; i < nvars(); ++i)
      if (it->first.anti[i] > 0) s += "*~" + vars_[i] + "^" + std::to_string(it->first.anti[i]);
  }
  return s;
}

HermPoly pow(const HermPoly& base, unsigned exp) {
  HermPoly out = HermPoly::constant(base.vars(), ExactComplex(1));
  for (unsigned k = 0; k < exp; ++k) out = out * base;
  return out;
}

HermPoly herm(const HoloPoly& p) {
  HermPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term({e, Exps(p.nvars(), 0)}, c);
  return out;
}

HermPoly herm_conj(const HoloPoly& p) {
  HermPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term({Exps(p.nvars(), 0), e}, c.conj());
  return out;
}

HermPoly modulus_squared(const HoloPoly& p) { return herm(p) * herm_conj(p); }

HermPoly re_part(const HoloPoly& p) {
  return (herm(p) + herm_conj(p)) * ExactComplex(make_rational(1, 2));
}

HermPoly im_part(const HoloPoly& p) {
  // (p - conj p) / (2i) = -(i/2) (p - conj p)
  return (herm(p) - herm_conj(p)) * ExactComplex(Rational(0), make_rational(-1, 2));
}

// ---------------------------------------------------------------------------
// RationalExpr

RationalExpr::RationalExpr(HoloPoly num, HoloPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  check_same_vars(num_.vars(), den_.vars(), "RationalExpr");
  if (den_.is_zero()) throw std::invalid_argument("RationalExpr: zero denominator");
  if (num_.is_zero()) {
    den_ = HoloPoly::constant(den_.vars(), ExactComplex(1));
    return;
  }
  // Clear the largest common monomial factor.
  Exps mn = num_.factor_out_monomial().first;
  Exps md = den_.factor_out_monomial().first;
  Exps common(mn.size());
  for (size_t i = 0; i < common.size(); ++i) common[i] = std::min(mn[i], md[i]);
  if (total(common) > 0) {
    num_ = num_.divide_monomial(common);
    den_ = den_.divide_monomial(common);
  }
  // Scale so the denominator's graded-lex leading coefficient is 1.
  ExactComplex lead = den_.terms().rbegin()->second;
  if (!(lead == ExactComplex(1))) {
    ExactComplex inv = ExactComplex(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalExpr::RationalExpr(HoloPoly num) : num_(num.vars()), den_(num.vars()) {
  VarList v = num.vars();
  *this = RationalExpr(std::move(num), HoloPoly::constant(std::move(v), ExactComplex(1)));
}

bool RationalExpr::equivalent(const RationalExpr& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RationalExpr RationalExpr::operator*(const RationalExpr& o) const {
  return RationalExpr(num_ * o.num_, den_ * o.den_);
}

RationalExpr RationalExpr::operator+(const RationalExpr& o) const {
  return RationalExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator-(const RationalExpr& o) const {
  return RationalExpr(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::derivative(size_t var) const {
  return RationalExpr(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

ExactComplex RationalExpr::eval(const std::vector<ExactComplex>& point) const {
  ExactComplex d = den_.eval(point);
  if (d.is_zero()) throw std::domain_error("RationalExpr::eval: denominator vanishes");
  return num_.eval(point) / d;
}

std::complex<double> RationalExpr::eval(const std::vector<std::complex<double>>& point) const {
  return num_.eval(point) / den_.eval(point);
}

std::string RationalExpr::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

ExactComplex HermRationalExpr::eval(const std::vector<ExactComplex>& point) const {
  ExactComplex d = den.eval(point);
  if (d.is_zero()) throw std::domain_error("HermRationalExpr::eval: denominator vanishes");
  return num.eval(point) / d;
}

std::complex<double> HermRationalExpr::eval(const std::vector<std::complex<double>>& point) const {
  return num.eval(point) / den.eval(point);
}

std::string HermRationalExpr::str() const { return "(" + num.str() + ") / (" + den.str() + ")"; }

}  // namespace crgeo
