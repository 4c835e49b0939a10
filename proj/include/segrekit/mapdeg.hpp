#ifndef SEGREKIT_MAPDEG_HPP
#define SEGREKIT_MAPDEG_HPP

#include <optional>
#include <string>

#include "segrekit/poly_matrix.hpp"
#include "segrekit/rational_map.hpp"

namespace segrekit {

// Tangent field of the Segre family fibers:
//   L = a(z; xibar) d/dw - etabar d/dz,   a = d/dz of the complexified rho.
// (xibar, etabar) live in the (zbar, wbar) slots and behave as parameters.
// L annihilates the complexified rho as a polynomial identity.
struct CRField {
  HypersurfaceParams params;
  Poly a_coeff;  // d/dw coefficient; the d/dz coefficient is -wbar
};

CRField cr_field(const HypersurfaceParams& params);

// L^order applied to g; order >= 1.
Poly apply_L(const CRField& field, const Poly& g, int order = 1);

// The restriction-degree bound 7 N (N+1) / 2.
long degree_bound(int N);

// ---- base locus ----

struct BaseLocus {
  std::vector<Point2> points;                        // exactly verified
  std::vector<std::pair<DPoint2, double>> numeric;   // verified within residual
  bool non_finite = false;
  bool all_exact = true;
};

// Common zeros of (P_1, ..., P_N, R).  Candidate coordinates come from
// pairwise resultants (plus single-variable components); candidates are
// snapped to Gaussian rationals where possible and back-substituted into
// every component, exactly when snapped.  Non-finiteness (only possible for
// maps with an undetected common factor) is flagged, not thrown.
BaseLocus base_locus(const RationalMap& F);

// ---- generic-degree comparison across Segre restrictions ----

struct DegreeCheckReport {
  int deg_map = 0;
  std::vector<int> restricted_degrees;
  bool degrees_stable = false;
  int stable_degree = -1;
  bool inequality_ok = false;  // deg F <= deg(F|Q_p) on every A-avoiding sample
  int n_samples = 0;
  uint64_t seed = 0;
  bool base_locus_finite = false;
  // a restriction through a base-locus point, recorded but never asserted
  std::optional<int> degree_through_base_point;
  double max_sample_rho_residual = 0.0;
  std::vector<std::string> notes;
};

// Samples rationalized near-surface points p with w_p != 0, z_p != 0 and
// Q_p disjoint from the base locus (disjointness decided exactly); records
// the restricted degree for each and compares with deg F.
DegreeCheckReport generic_degree_check(const RationalMap& F, const HypersurfaceParams& params,
                                       int n_samples, uint64_t seed);

// ---- Cramer reconstruction of the restricted map from jet data ----

struct Signature {
  int plus = 0, minus = 0;  // target Hermitian form: sum |Z_j|^2 over plus
                            // components minus the rest equals 1
  int dim() const { return plus + minus; }
  int weight(int j) const { return j < plus ? 1 : -1; }
  static Signature ball(int n) { return {n, 0}; }
};

struct Reconstruction {
  std::vector<RationalFunction> components;  // in xi (Var::Z)
  // certificate
  std::string pairing;           // "hyperquadric" or "tautological"
  int rank_k = 0;                // rank of {V_alpha, alpha >= 1} over Q(i)(xibar)
  std::vector<int> orders_used;  // L-orders entering the solve
  bool first_k_orders_suffice = false;
  int n_completion_vectors = 0;
  int taylor_span_dim = 0;  // dim of the coefficient span of X - X(p0)
  int degree = 0;
  long bound = 0;
  bool within_bound = false;
  bool matches_restriction = false;
  int matrix_degree = 0;  // degree of the Cramer determinant
  std::string rho_residual_at_p0;
};

// Rebuilds F|_{Q_{p0}} by Cramer's rule from the rows
// V_alpha = (L^alpha F_1(p0), ..., L^alpha F_N(p0)) with etabar := conj(phi):
// when the map carries the signature identity sum_j e_j F_j(Z) conj(F_j)(W)
// = 1 on the complexification (certified by exact division by rho), the
// system is the signature-weighted pair of the tangency rows with the
// inhomogeneous row at order zero; otherwise the right-hand sides are taken
// from the known restriction, which still exercises the rank, completion
// and degree bookkeeping.  Rank is computed fraction-free over the rational
// function field.  Requires w_{p0} != 0 and R(p0) != 0.
Reconstruction cramer_reconstruct(const RationalMap& F, const HypersurfaceParams& params,
                                  const Point2& p0, const Signature& sig, uint64_t seed = 17);

}  // namespace segrekit

#endif
