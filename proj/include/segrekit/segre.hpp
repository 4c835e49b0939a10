#ifndef SEGREKIT_SEGRE_HPP
#define SEGREKIT_SEGRE_HPP

#include <vector>

#include "segrekit/hypersurface.hpp"

namespace segrekit {

// Graph polynomial phi(conj(p), xi) of the family Segre variety
// Q_p = {(xi, eta) : eta = phi(conj(p), xi)}, univariate in xi (slot Var::Z):
//   phi = -(eps0*(xi^4 zb^4 + c/2 (xi^7 zb + xi zb^7)) + xi^5 zb^5
//           + eps xi zb - 1) / wb,      zb = conj(z_p), wb = conj(w_p).
// Degree <= 7, with equality iff z_p != 0.  Requires w_p != 0.
Poly segre_graph(const HypersurfaceParams& params, const Point2& p);

// Implicit defining polynomial of Q_p in (z, w): the complexified rho with
// the barred slots frozen at conj(p).  Works for any hypersurface.
Poly segre_implicit(const Hypersurface& h, const Point2& p);

// Membership q in Q_p, decided exactly.  Equals (p in Q_q) for Hermitian rho.
bool segre_contains(const Hypersurface& h, const Point2& p, const Point2& q);

// Symmetric-membership check; returns q in Q_p (and the contract is that the
// result equals p in Q_q).
inline bool segre_symmetry_check(const Hypersurface& h, const Point2& p, const Point2& q) {
  return segre_contains(h, p, q);
}

// Reflection R_xi(p) = (xi, phi(conj(p), xi)); lands on Q_p by construction.
Point2 reflection(const HypersurfaceParams& params, const ComplexRational& xi, const Point2& p);

// Lazy two-form view of a Segre variety of the family.
struct SegreVariety {
  HypersurfaceParams params;
  Point2 base_point;

  bool has_graph() const { return !base_point.w.is_zero(); }
  Poly graph() const { return segre_graph(params, base_point); }
  Poly implicit_form() const { return segre_implicit(make_family(params), base_point); }
};

// Segre variety of the unit sphere in C^N at q: the affine hyperplane
// sum_j Z_j conj(q_j) = 1.
struct SphereSegre {
  std::vector<ComplexRational> base_point;
};

struct SphereSegreReport {
  int dimension = 0;
  int trials = 0;
  uint64_t seed = 0;
  // max over trials of | |Z'|^2 - 1 - |Z'-q|^2 | for Z' on the hyperplane
  double max_identity_residual = 0.0;
  // max distance of the reconstructed unit point from q
  double max_reconstruction_gap = 0.0;
  bool pass = false;
};

// Certifies the single-point intersection boundary(B^N) and Q'_q = {q} at
// sample resolution via the Pythagoras identity |q + v|^2 = 1 + |v|^2 for
// v complex-orthogonal to q (Cauchy-Schwarz equality rigidity).
// Requires |q| = 1 (within 1e-12); throws otherwise.
SphereSegreReport sphere_segre_unique_intersection(const std::vector<std::complex<double>>& q,
                                                   int trials, uint64_t seed);

// Exact version of the rigidity identity for a rational unit vector q and a
// rational v with <v, q> = 0: checks |q+v|^2 - 1 == |v|^2 exactly.
bool sphere_segre_rigidity_exact(const std::vector<ComplexRational>& q,
                                 const std::vector<ComplexRational>& v);

}  // namespace segrekit

#endif
