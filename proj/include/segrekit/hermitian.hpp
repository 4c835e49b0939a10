#ifndef SEGREKIT_HERMITIAN_HPP
#define SEGREKIT_HERMITIAN_HPP

#include "segrekit/polynomial.hpp"

namespace segrekit {

// Real-valued polynomial sum c_{ab} Z^a Zbar^b with c_{ab} = conj(c_{ba}).
// Stored on the same 4-variable monomial space as Poly: the (z, w) exponents
// carry the holomorphic multi-index a and (zbar, wbar) carry b.  The
// complexification (treat zbar, wbar as independent variables) is then the
// identity on the representation.
class HermPoly {
 public:
  HermPoly() = default;

  // Validates the Hermitian symmetry coefficientwise.
  explicit HermPoly(Poly p) : p_(std::move(p)) {
    if (!is_hermitian(p_))
      throw std::invalid_argument("HermPoly: coefficients are not Hermitian-symmetric");
  }

  static bool is_hermitian(const Poly& p) {
    for (const auto& [m, c] : p.terms()) {
      Monomial swapped;
      for (Var v : {Var::Z, Var::W, Var::ZB, Var::WB}) swapped[bar_partner(v)] = m[v];
      if (p.coeff(swapped) != c.conj()) return false;
    }
    return true;
  }

  const Poly& complexify() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  ComplexRational coeff(const Monomial& m) const { return p_.coeff(m); }

  friend HermPoly operator+(const HermPoly& a, const HermPoly& b) {
    return HermPoly::unchecked(a.p_ + b.p_);
  }
  friend HermPoly operator-(const HermPoly& a, const HermPoly& b) {
    return HermPoly::unchecked(a.p_ - b.p_);
  }
  friend HermPoly operator*(const HermPoly& a, const HermPoly& b) {
    return HermPoly::unchecked(a.p_ * b.p_);
  }
  friend bool operator==(const HermPoly& a, const HermPoly& b) { return a.p_ == b.p_; }

  // Scaling by a non-real scalar would break real-valuedness.
  HermPoly scale(const ComplexRational& s) const {
    if (!s.is_real())
      throw std::invalid_argument("HermPoly: scaling by a non-real scalar");
    return unchecked(s * p_);
  }

  // Exact evaluation at (Z, Zbar); the imaginary part cancels identically.
  Rat eval_real(const ComplexRational& z, const ComplexRational& w) const {
    ComplexRational v = p_.eval({z, w, z.conj(), w.conj()});
    if (!v.is_real())
      throw std::logic_error("HermPoly: evaluation produced a non-real value");
    return v.re();
  }

  double eval_real_double(std::complex<double> z, std::complex<double> w) const {
    return p_.eval_double({z, w, std::conj(z), std::conj(w)}).real();
  }

  // Builds |q|^2 = q(Z) * conj(q)(Zbar) from a holomorphic q (vars z, w only).
  static HermPoly squared_modulus(const Poly& q) {
    if (q.depends_on(Var::ZB) || q.depends_on(Var::WB))
      throw std::invalid_argument("squared_modulus: input must be holomorphic");
    return unchecked(q * q.conjugate());
  }

  static HermPoly unchecked(Poly p) {
    HermPoly h;
    h.p_ = std::move(p);
    return h;
  }

 private:
  Poly p_;
};

}  // namespace segrekit

#endif
