#pragma once

// Sparse exact polynomial algebra in two flavours:
//
//   HoloPoly  - polynomials in complex variables z1..zn with ExactComplex
//               coefficients (no conjugated variables).
//   HermPoly  - polynomials in z1..zn AND their conjugates ~z1..~zn, the ring
//               where real-analytic defining functions such as |z1|^2 - Im z2
//               live. A HermPoly is "real symmetric" when the coefficient at
//               (alpha, beta) is the conjugate of the one at (beta, alpha);
//               such polynomials take real values.
//
// Terms are kept in a canonical graded-lexicographic map with no explicit
// zero coefficients, so operator== is structural equality and a polynomial
// identity can be certified by subtracting and testing is_zero().

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crgeo/rational.hpp"

namespace crgeo {

using VarList = std::vector<std::string>;
using Exps = std::vector<unsigned>;

std::string varlist_str(const VarList& vars);
void check_same_vars(const VarList& a, const VarList& b, const char* where);

// Graded lexicographic: total degree first, ties broken variable by variable.
struct GradedLex {
  bool operator()(const Exps& a, const Exps& b) const;
};

// Key of a HermPoly term: exponents of the plain variables and of the
// conjugated ones. Ordered by total degree across both blocks, then lex.
struct PairExps {
  Exps hol;
  Exps anti;
  friend bool operator==(const PairExps& a, const PairExps& b) {
    return a.hol == b.hol && a.anti == b.anti;
  }
};
struct PairGradedLex {
  bool operator()(const PairExps& a, const PairExps& b) const;
};

class HoloPoly {
 public:
  using TermMap = std::map<Exps, ExactComplex, GradedLex>;

  HoloPoly() = default;  // zero polynomial over no variables (builder slot)
  explicit HoloPoly(VarList vars) : vars_(std::move(vars)) {}

  static HoloPoly zero(VarList vars) { return HoloPoly(std::move(vars)); }
  static HoloPoly constant(VarList vars, const ExactComplex& c);
  static HoloPoly variable(VarList vars, const std::string& name);
  static HoloPoly variable(VarList vars, size_t index);
  static HoloPoly monomial(VarList vars, Exps exps, const ExactComplex& c);

  const VarList& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  size_t var_index(const std::string& name) const;  // throws if unknown

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  ExactComplex constant_value() const;  // requires is_constant()
  ExactComplex coeff(const Exps& e) const;
  int degree() const;             // total degree, -1 for the zero polynomial
  int degree_in(size_t var) const;

  HoloPoly& operator+=(const HoloPoly& o);
  HoloPoly& operator-=(const HoloPoly& o);
  friend HoloPoly operator+(HoloPoly a, const HoloPoly& b) { return a += b; }
  friend HoloPoly operator-(HoloPoly a, const HoloPoly& b) { return a -= b; }
  friend HoloPoly operator*(const HoloPoly& a, const HoloPoly& b);
  friend HoloPoly operator-(const HoloPoly& a) { return a * ExactComplex(-1); }
  friend HoloPoly operator*(const HoloPoly& a, const ExactComplex& c);
  friend HoloPoly operator*(const ExactComplex& c, const HoloPoly& a) { return a * c; }
  friend bool operator==(const HoloPoly& a, const HoloPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HoloPoly& a, const HoloPoly& b) { return !(a == b); }

  ExactComplex eval(const std::vector<ExactComplex>& point) const;
  std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

  // Simultaneous substitution var i -> images[i]. All images must share one
  // variable list, which becomes the list of the result.
  HoloPoly substitute(const std::vector<HoloPoly>& images) const;
  HoloPoly substitute(const std::map<std::string, HoloPoly>& bindings) const;

  HoloPoly derivative(size_t var) const;

  // Largest monomial dividing every term; returns (monomial exps, quotient).
  std::pair<Exps, HoloPoly> factor_out_monomial() const;
  HoloPoly divide_monomial(const Exps& m) const;  // throws if not divisible

  // Exact single-divisor division. nullopt when the division leaves a
  // remainder; never fails for actual factors since reduction of the graded
  // leading term is confluent for one divisor.
  std::optional<HoloPoly> try_divide(const HoloPoly& divisor) const;
  HoloPoly divide_exact(const HoloPoly& divisor) const;  // throws on remainder

  // Coefficients of powers of `var`: result[k] is a polynomial with no `var`.
  std::vector<HoloPoly> coeffs_in(size_t var) const;

  void add_term(const Exps& e, const ExactComplex& c);  // canonicalizing
  std::string str() const;

 private:
  VarList vars_;
  TermMap terms_;
};

HoloPoly pow(const HoloPoly& base, unsigned exp);

// Sylvester resultant of p and q with respect to `var` (both at most
// bivariate in practice; the matrix determinant is expanded exactly).
// Convention: if exactly one argument has degree zero in `var` it is raised
// to the degree of the other; two degree-zero arguments are rejected.
HoloPoly resultant(const HoloPoly& p, const HoloPoly& q, size_t var);

class HermPoly {
 public:
  using TermMap = std::map<PairExps, ExactComplex, PairGradedLex>;

  HermPoly() = default;  // zero polynomial over no variables (builder slot)
  explicit HermPoly(VarList vars) : vars_(std::move(vars)) {}

  static HermPoly zero(VarList vars) { return HermPoly(std::move(vars)); }
  static HermPoly constant(VarList vars, const ExactComplex& c);

  const VarList& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  ExactComplex constant_value() const;
  ExactComplex coeff(const PairExps& e) const;
  int degree() const;  // total degree over both blocks

  // coeff(alpha,beta) == conj(coeff(beta,alpha)) for every term: the
  // polynomial is real-valued.
  bool is_real_symmetric() const;

  HermPoly& operator+=(const HermPoly& o);
  HermPoly& operator-=(const HermPoly& o);
  friend HermPoly operator+(HermPoly a, const HermPoly& b) { return a += b; }
  friend HermPoly operator-(HermPoly a, const HermPoly& b) { return a -= b; }
  friend HermPoly operator*(const HermPoly& a, const HermPoly& b);
  friend HermPoly operator-(const HermPoly& a) { return a * ExactComplex(-1); }
  friend HermPoly operator*(const HermPoly& a, const ExactComplex& c);
  friend HermPoly operator*(const ExactComplex& c, const HermPoly& a) { return a * c; }
  friend bool operator==(const HermPoly& a, const HermPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HermPoly& a, const HermPoly& b) { return !(a == b); }

  HermPoly conj() const;

  // The point supplies z1..zn; conjugated variables take the conjugate values.
  ExactComplex eval(const std::vector<ExactComplex>& point) const;
  std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

  // var i -> images[i], ~var i -> conj(images[i]).
  HermPoly substitute(const std::vector<HermPoly>& images) const;

  HermPoly d_z(size_t var) const;     // Wirtinger derivative in z_var
  HermPoly d_zbar(size_t var) const;  // Wirtinger derivative in ~z_var

  // Largest paired monomial prod z^h * ~z^a dividing every term.
  std::pair<PairExps, HermPoly> factor_out_monomial() const;
  HermPoly divide_monomial(const PairExps& m) const;  // throws if not divisible

  // min over terms of max(hol exp, anti exp) of variable `var`: the power of
  // |z_var|^2 by which the polynomial may be divided as a rational expression
  // valid off {z_var = 0}.
  unsigned modulus_reduction_power(size_t var) const;
  // min over terms of min(hol exp, anti exp): the power of |z_var|^2 dividing
  // the polynomial inside the ring itself.
  unsigned modulus_divisible_power(size_t var) const;

  void add_term(const PairExps& e, const ExactComplex& c);
  std::string str() const;  // conjugated variables rendered with a '~' prefix

 private:
  VarList vars_;
  TermMap terms_;
};

HermPoly pow(const HermPoly& base, unsigned exp);

// Embeddings of the holomorphic ring and the real building blocks.
HermPoly herm(const HoloPoly& p);              // p, holomorphic in z
HermPoly herm_conj(const HoloPoly& p);         // conj(p), antiholomorphic
HermPoly modulus_squared(const HoloPoly& p);   // p * conj(p)
HermPoly re_part(const HoloPoly& p);           // (p + conj p)/2
HermPoly im_part(const HoloPoly& p);           // (p - conj p)/(2i)

// Quotient of holomorphic polynomials. Construction clears the largest
// common monomial factor and rejects a zero denominator; equality of the
// represented rational functions is tested by cross multiplication.
class RationalExpr {
 public:
  RationalExpr(HoloPoly num, HoloPoly den);
  explicit RationalExpr(HoloPoly num);  // denominator 1

  const HoloPoly& num() const { return num_; }
  const HoloPoly& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool equivalent(const RationalExpr& o) const;

  RationalExpr operator*(const RationalExpr& o) const;
  RationalExpr operator+(const RationalExpr& o) const;
  RationalExpr operator-(const RationalExpr& o) const;

  // (num' den - num den') / den^2, with the common-monomial normalization.
  RationalExpr derivative(size_t var) const;

  ExactComplex eval(const std::vector<ExactComplex>& point) const;  // throws if den -> 0
  std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

  std::string str() const;  // "(num) / (den)"

 private:
  HoloPoly num_;
  HoloPoly den_;
};

// Quotient in the Hermitian ring; used for reduced defining equations that
// are valid off an exceptional locus.
struct HermRationalExpr {
  HermPoly num;
  HermPoly den;

  ExactComplex eval(const std::vector<ExactComplex>& point) const;
  std::complex<double> eval(const std::vector<std::complex<double>>& point) const;
  std::string str() const;
};

}  // namespace crgeo
