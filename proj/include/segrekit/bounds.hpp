#ifndef SEGREKIT_BOUNDS_HPP
#define SEGREKIT_BOUNDS_HPP

#include <vector>

#include "segrekit/polynomial.hpp"
#include "segrekit/prng.hpp"

namespace segrekit {

// p(z) = 1 + a_1 z + ... + a_m z^m with exact coefficients; a[i-1] = a_i.
struct DiskPoly {
  std::vector<ComplexRational> a;

  int m() const { return static_cast<int>(a.size()); }
  Poly to_poly() const;

  // prod_i (1 - z/r_i); every root must be nonzero.
  static DiskPoly from_roots(const std::vector<ComplexRational>& roots);
};

struct BoundConstant {
  int m = 0;
  Rat c_m;  // max_j binom(m, j)
};

// The explicit Vieta constant: each coefficient of a disk-nonvanishing
// normalized polynomial is a sum of binom(k, j) reciprocal root products of
// modulus <= 1, so |a_i| <= max_j binom(m, j).
BoundConstant c_m_constant(int m);

enum class DiskStatus { Vanishing, Nonvanishing, BoundaryAmbiguous };

// Root-modulus certification with margin 1e-10; numeric roots inside the
// margin band are snapped to Gaussian rationals, verified as exact roots
// with |root| >= 1, and deflated exactly.  Anything still unresolved is
// reported BoundaryAmbiguous, never silently resolved.
DiskStatus nonvanishing_on_disk(const DiskPoly& p);

struct Lemma28Report {
  int m = 0;
  Rat c_m;
  bool coeff_bound_ok = false;  // |a_i| <= C_m for all i, checked exactly
  double max_coeff_modulus = 0.0;
  double sup_estimate = 0.0;  // max |p| over 2048 boundary points
  double sup_bound = 0.0;     // m C_m + 1
  bool sup_ok = false;
};

// Requires nonvanishing_on_disk(p) == Nonvanishing; throws otherwise.
Lemma28Report verify_coefficient_bound(const DiskPoly& p);

struct Lemma29Report {
  int m = 0;
  int dimension = 2;
  int n_directions = 0;
  uint64_t seed = 0;
  Rat c_m;
  double sup_bound = 0.0;            // m C_m + 1 over the ball
  double max_slice_coeff = 0.0;
  bool all_slices_ok = false;
  // derived per-order coefficient bound (m C_m + 1) * N^{|alpha|/2} from the
  // inscribed-polydisc Cauchy estimate; depends on N, not only on m
  std::vector<double> coeff_bounds;
};

// Slices p along seeded rational unit directions of C^2 and runs the disk
// bound on each slice.  p must satisfy p(0) = 1 and be a polynomial in
// (z, w).  A slice vanishing in the disk throws, naming the direction.
Lemma29Report verify_ball_bound(const Poly& p, int n_directions, uint64_t seed);

// |coeff_{ij}| <= sup / s^{i+j} with s = r/sqrt(2) (polydisc inscribed in
// the ball of radius r); entry k of the result bounds total degree k <= d.
std::vector<double> cauchy_coeff_bound(double sup_bound, double r, int total_degree_cap);

// Exact certificate that B(0, r) lies inside the family domain for every
// 0 <= eps < 1: the majorant eps0 (1 + c) r^8 + 2 r^2 + r^10 - 1 < 0.
bool certify_ball_radius(const Rat& eps0, const Rat& c, const Rat& r);

// Random coefficient-bound trial: exact rational roots with |root|^2 >= 1,
// so nonvanishing holds by construction and the coefficient inequality is
// checked exactly.  Returns false iff a violation occurred.
bool random_disk_trial(Rng& rng, int m);

}  // namespace segrekit

#endif
