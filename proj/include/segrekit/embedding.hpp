#ifndef SEGREKIT_EMBEDDING_HPP
#define SEGREKIT_EMBEDDING_HPP

#include "segrekit/mapdeg.hpp"

namespace segrekit {

// The explicit degree-7 embedding of the family surface into the
// generalized sphere {sum_{j<=5} |Z_j|^2 - |Z_6|^2 = 1} of C^6:
//   F = (sqrt(eps0) z^4, sqrt(eps0 c)/2 (z^7 + z), w, z^5,
//        sqrt(eps) z,    sqrt(eps0 c)/2 (z^7 - z)).
// Requires the three square roots to be rational; throws naming the
// offending parameter otherwise.  (The canonical parameters give
// coefficients 1/10, 3/40, 1, 1, 1/2, 3/40.)
RationalMap remark_212_map(const HypersurfaceParams& params);

inline Signature hyperquadric_signature() { return {5, 1}; }

struct IdentityReport {
  bool pass = false;
  // sum_{j<=5} |F_j|^2 - |F_6|^2 - 1 - rho; identically zero iff pass
  Poly difference;
};

// Coefficientwise-exact check of the defining identity for rational-root
// parameters.
IdentityReport verify_identity(const HypersurfaceParams& params);

// Same identity for arbitrary admissible parameters, carried out in
// Q[s1,s2,s3] with s1^2 = eps0, s2^2 = eps0*c/4, s3^2 = eps.
bool verify_identity_symbolic(const Rat& eps0, const Rat& c, const Rat& eps);

// Re(|z|^2 z^6) = (|z^7+z|^2 - |z^7-z|^2) / 4, exactly.
bool verify_quarter_identity();

struct ImmersionReport {
  int n_samples = 0;
  uint64_t seed = 0;
  double min_jacobian_minor = 0.0;  // max 2x2 minor modulus, minimized over samples
  bool full_rank_everywhere = false;
  int collisions = 0;
  double min_image_separation = 0.0;
  double max_onsphere_residual = 0.0;  // | sum |F_j|^2 - |F_6|^2 - 1 | on samples
  bool pass = false;
  std::vector<DPoint2> witnesses;
};

// Rank-2 differential and pairwise injectivity at sample resolution.
ImmersionReport immersion_check(const HypersurfaceParams& params, int n_samples, uint64_t seed);

}  // namespace segrekit

#endif
