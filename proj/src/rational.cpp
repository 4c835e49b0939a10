#include "segrekit/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace segrekit {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rationalize(double x, unsigned long den_bound) {
  if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite input");
  // continued-fraction convergents p/q with q <= den_bound
  double v = x;
  mpz_class p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // p0/q0 = 1/0, p1/q1 = 0/1
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 9e18 || fl < -9e18) break;
    mpz_class a(static_cast<long>(fl));
    mpz_class p2 = a * p0 + p1, q2 = a * q0 + q1;
    if (q2 > mpz_class(den_bound)) break;
    p1 = p0; q1 = q0; p0 = p2; q0 = q2;
    double frac = v - fl;
    if (frac < 1e-18) break;
    v = 1.0 / frac;
  }
  if (q0 == 0) return Rat(0);
  Rat r(p0, q0);
  r.canonicalize();
  return r;
}

bool rat_sqrt_exact(const Rat& r, Rat* root) {
  if (r < 0) return false;
  mpz_class num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  if (root) {
    *root = Rat(sn, sd);
    root->canonicalize();
  }
  return true;
}

std::string ComplexRational::to_string() const {
  return rat_to_string(re_) + (im_ >= 0 ? "+" : "") + rat_to_string(im_) + "i";
}

ComplexRational crat_from_strings(const std::string& re, const std::string& im) {
  return {rat_from_string(re), rat_from_string(im)};
}

ComplexRational crat_rationalize(std::complex<double> x, unsigned long den_bound) {
  return {rationalize(x.real(), den_bound), rationalize(x.imag(), den_bound)};
}

}  // namespace segrekit
