#ifndef SEGREKIT_RATIONAL_FUNCTION_HPP
#define SEGREKIT_RATIONAL_FUNCTION_HPP

#include "segrekit/polynomial.hpp"

namespace segrekit {

// Reduced univariate rational function num/den in a fixed variable.
// Canonical form: gcd(num, den) = 1 and den monic, so equality of canonical
// forms is representation equality.
class RationalFunction {
 public:
  RationalFunction() : var_(Var::Z), num_(), den_(Poly::constant(1)) {}

  RationalFunction(Poly num, Poly den, Var v) : var_(v), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (!num_.is_univariate_in(v) || !den_.is_univariate_in(v))
      throw std::invalid_argument("RationalFunction: inputs must be univariate");
    reduce();
  }

  static RationalFunction from_poly(Poly p, Var v) {
    return RationalFunction(std::move(p), Poly::constant(1), v);
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  Var var() const { return var_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == Poly::constant(1); }

  // Definition-style degree of a rational function: max(deg num, deg den).
  int degree() const {
    return std::max(num_.degree_in(var_), den_.degree_in(var_));
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, a.var_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, a.var_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_, a.var_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_, a.var_);
  }

  // Equality as rational functions (cross multiplication, reduction-agnostic).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  // Renames the variable and conjugates coefficients: f(v) -> conj(f)(vbar).
  RationalFunction conjugated() const {
    RationalFunction r;
    r.var_ = bar_partner(var_);
    r.num_ = num_.conjugate();
    r.den_ = den_.conjugate();
    return r;
  }

  ComplexRational eval(const ComplexRational& x) const {
    std::array<ComplexRational, kNumVars> pt{};
    pt[static_cast<int>(var_)] = x;
    ComplexRational d = den_.eval(pt);
    if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation at a pole");
    return num_.eval(pt) / d;
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    Poly g = gcd_univariate(num_, den_, var_);
    if (g.degree_in(var_) > 0) {
      num_ = divide_exact(num_, g, var_);
      den_ = divide_exact(den_, g, var_);
    }
    ComplexRational lead = leading_coeff(den_, var_);
    ComplexRational inv = ComplexRational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }

  Var var_;
  Poly num_, den_;
};

}  // namespace segrekit

#endif
