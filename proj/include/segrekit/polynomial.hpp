#ifndef SEGREKIT_POLYNOMIAL_HPP
#define SEGREKIT_POLYNOMIAL_HPP

#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "segrekit/monomial.hpp"
#include "segrekit/rational.hpp"

namespace segrekit {

// Sparse multivariate polynomial over a coefficient ring K.  K must provide
// ring arithmetic, is_zero(), conj(), and construction from long.  The
// concrete instantiation used almost everywhere is K = ComplexRational;
// PolynomialT<QuadExt> backs the symbolic-parameter embedding check.
template <class K>
class PolynomialT {
 public:
  using TermMap = std::map<Monomial, K, GradedLex>;

  PolynomialT() = default;
  explicit PolynomialT(const K& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  PolynomialT(const K& c, const Monomial& m) {
    if (!c.is_zero()) terms_[m] = c;
  }

  static PolynomialT variable(Var v) { return PolynomialT(K(1), mono_var(v)); }
  static PolynomialT constant(long c) { return PolynomialT(K(c)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  K coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  void set_coeff(const Monomial& m, const K& c) {
    if (c.is_zero())
      terms_.erase(m);
    else
      terms_[m] = c;
  }

  void add_term(const Monomial& m, const K& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend PolynomialT operator+(const PolynomialT& a, const PolynomialT& b) {
    PolynomialT r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend PolynomialT operator-(const PolynomialT& a, const PolynomialT& b) {
    PolynomialT r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, K(0) - c);
    return r;
  }
  friend PolynomialT operator-(const PolynomialT& a) {
    PolynomialT r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = K(0) - c;
    return r;
  }
  friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
    PolynomialT r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend PolynomialT operator*(const K& s, const PolynomialT& a) {
    PolynomialT r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) {
      K v = s * c;
      if (!v.is_zero()) r.terms_[m] = v;
    }
    return r;
  }
  PolynomialT& operator+=(const PolynomialT& b) { return *this = *this + b; }
  PolynomialT& operator-=(const PolynomialT& b) { return *this = *this - b; }
  PolynomialT& operator*=(const PolynomialT& b) { return *this = *this * b; }

  friend bool operator==(const PolynomialT& a, const PolynomialT& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolynomialT& a, const PolynomialT& b) {
    return !(a == b);
  }

  PolynomialT pow(uint32_t n) const {
    PolynomialT r = constant(1);
    PolynomialT base = *this;
    while (n) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  // Total degree restricted to a subset of variables; -1 for the zero poly.
  int degree(std::initializer_list<Var> vars) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (Var v : vars) s += static_cast<int>(m[v]);
      if (s > d) d = s;
    }
    return d;
  }
  int degree() const {
    return degree({Var::Z, Var::W, Var::ZB, Var::WB});
  }
  int degree_in(Var v) const { return degree({v}); }

  bool depends_on(Var v) const {
    for (const auto& [m, c] : terms_)
      if (m[v] > 0) return true;
    return false;
  }
  bool is_univariate_in(Var v) const {
    for (Var u : {Var::Z, Var::W, Var::ZB, Var::WB})
      if (u != v && depends_on(u)) return false;
    return true;
  }
  bool is_constant() const { return degree() <= 0; }

  // Exact composition: var := expr.  expr must not depend on var.
  PolynomialT substitute(Var v, const PolynomialT& expr) const {
    if (expr.depends_on(v))
      throw std::invalid_argument("substitute: expression depends on the substituted variable");
    std::vector<PolynomialT> powers{constant(1)};
    PolynomialT r;
    for (const auto& [m, c] : terms_) {
      uint32_t k = m[v];
      while (powers.size() <= k) powers.push_back(powers.back() * expr);
      Monomial rest = m;
      rest[v] = 0;
      r += PolynomialT(c, rest) * powers[k];
    }
    return r;
  }

  // Swaps each variable with its barred partner and conjugates coefficients.
  PolynomialT conjugate() const {
    PolynomialT r;
    for (const auto& [m, c] : terms_) {
      Monomial n;
      for (Var v : {Var::Z, Var::W, Var::ZB, Var::WB}) n[bar_partner(v)] = m[v];
      r.terms_[n] = c.conj();
    }
    return r;
  }

  PolynomialT derivative(Var v) const {
    PolynomialT r;
    for (const auto& [m, c] : terms_) {
      uint32_t k = m[v];
      if (k == 0) continue;
      Monomial n = m;
      n[v] = k - 1;
      r.add_term(n, K(static_cast<long>(k)) * c);
    }
    return r;
  }

  K eval(const std::array<K, kNumVars>& point) const {
    K acc(0);
    for (const auto& [m, c] : terms_) {
      K t = c;
      for (int i = 0; i < kNumVars; ++i)
        for (uint32_t k = 0; k < m.e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  std::complex<double> eval_double(const std::array<std::complex<double>, kNumVars>& p) const;

  // Coefficient of v^k, collecting the other variables.
  PolynomialT coeff_of(Var v, uint32_t k) const {
    PolynomialT r;
    for (const auto& [m, c] : terms_) {
      if (m[v] != k) continue;
      Monomial n = m;
      n[v] = 0;
      r.terms_[n] = c;
    }
    return r;
  }

  // Dense coefficient list c[0..deg] of a polynomial univariate in v.
  std::vector<K> univariate_coeffs(Var v) const {
    if (!is_univariate_in(v))
      throw std::invalid_argument("univariate_coeffs: polynomial is not univariate");
    int d = degree_in(v);
    std::vector<K> c(static_cast<std::size_t>(d < 0 ? 0 : d) + 1, K(0));
    for (const auto& [m, k] : terms_) c[m[v]] = k;
    return c;
  }

  static PolynomialT from_univariate_coeffs(Var v, const std::vector<K>& c) {
    PolynomialT r;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) r.terms_[mono_var(v, static_cast<uint32_t>(i))] = c[i];
    return r;
  }

 private:
  TermMap terms_;
};

using Poly = PolynomialT<ComplexRational>;

inline std::complex<double> to_cd(const ComplexRational& c) { return c.to_complex(); }

template <>
inline std::complex<double> Poly::eval_double(
    const std::array<std::complex<double>, kNumVars>& p) const {
  std::complex<double> acc = 0.0;
  for (const auto& [m, c] : terms()) {
    std::complex<double> t = to_cd(c);
    for (int i = 0; i < kNumVars; ++i)
      for (uint32_t k = 0; k < m.e[i]; ++k) t *= p[i];
    acc += t;
  }
  return acc;
}

// ---- univariate field arithmetic over Q(i) ----

// Quotient of univariate polynomials; throws unless the division is exact.
Poly divide_exact(const Poly& a, const Poly& b, Var v);

// Remainder of univariate long division.
Poly poly_mod(const Poly& a, const Poly& b, Var v);

// Monic gcd of two univariate polynomials in v.  gcd(0,0) is an error.
Poly gcd_univariate(const Poly& a, const Poly& b, Var v);

Poly lcm_univariate(const Poly& a, const Poly& b, Var v);

// Single-divisor multivariate reduction under graded-lex (a principal ideal
// has its generator as Groebner basis, so remainder 0 decides membership).
// Returns {quotient, remainder} with a == q*d + r.
std::pair<Poly, Poly> reduce_by(const Poly& a, const Poly& d);

// Leading coefficient of a univariate polynomial in v.
ComplexRational leading_coeff(const Poly& p, Var v);

std::string poly_to_string(const Poly& p);

}  // namespace segrekit

#endif
