#ifndef SEGREKIT_RATIONAL_HPP
#define SEGREKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace segrekit {

using Rat = mpq_class;

// Parses "p/q" or "p"; canonicalizes so q > 0 and gcd(p,q) = 1.
Rat rat_from_string(const std::string& s);

// Always emits "p/q" with q > 0, matching the on-disk format.
std::string rat_to_string(const Rat& r);

// Nearest rational with denominator <= den_bound (continued fractions).
Rat rationalize(double x, unsigned long den_bound = (1UL << 40));

// true iff r is the square of a rational; if so *root is the non-negative root.
bool rat_sqrt_exact(const Rat& r, Rat* root);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

// Exact element of Q(i).  All arithmetic is rounding-free.
class ComplexRational {
 public:
  ComplexRational() : re_(0), im_(0) {}
  ComplexRational(Rat re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
  ComplexRational(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  ComplexRational(long re) : re_(re), im_(0) {}
  ComplexRational(long re, long im) : re_(re), im_(im) {}

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  ComplexRational conj() const { return {re_, Rat(-im_)}; }
  Rat norm2() const { return Rat(re_ * re_ + im_ * im_); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {Rat(a.re_ + b.re_), Rat(a.im_ + b.im_)};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {Rat(a.re_ - b.re_), Rat(a.im_ - b.im_)};
  }
  friend ComplexRational operator-(const ComplexRational& a) {
    return {Rat(-a.re_), Rat(-a.im_)};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {Rat(a.re_ * b.re_ - a.im_ * b.im_), Rat(a.re_ * b.im_ + a.im_ * b.re_)};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    Rat n = b.norm2();
    if (n == 0) throw std::domain_error("ComplexRational: division by zero");
    return {Rat((a.re_ * b.re_ + a.im_ * b.im_) / n),
            Rat((a.im_ * b.re_ - a.re_ * b.im_) / n)};
  }
  ComplexRational& operator+=(const ComplexRational& b) { return *this = *this + b; }
  ComplexRational& operator-=(const ComplexRational& b) { return *this = *this - b; }
  ComplexRational& operator*=(const ComplexRational& b) { return *this = *this * b; }
  ComplexRational& operator/=(const ComplexRational& b) { return *this = *this / b; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  Rat re_, im_;
};

inline ComplexRational conj(const ComplexRational& x) { return x.conj(); }

ComplexRational crat_from_strings(const std::string& re, const std::string& im);

// Gaussian-rational approximation of a complex double.
ComplexRational crat_rationalize(std::complex<double> x,
                                 unsigned long den_bound = (1UL << 40));

}  // namespace segrekit

#endif
