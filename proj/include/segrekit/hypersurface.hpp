#ifndef SEGREKIT_HYPERSURFACE_HPP
#define SEGREKIT_HYPERSURFACE_HPP

#include <complex>
#include <optional>
#include <vector>

#include "segrekit/hermitian.hpp"
#include "segrekit/prng.hpp"

namespace segrekit {

// Exact point of C^2.
struct Point2 {
  ComplexRational z, w;
};

// Floating point of C^2.
struct DPoint2 {
  std::complex<double> z, w;
};

inline DPoint2 to_double(const Point2& p) {
  return {p.z.to_complex(), p.w.to_complex()};
}

// Parameters (eps0, c, eps) of the deformed family
//   rho = eps0*(|z|^8 + c*Re(|z|^2 z^6)) + |w|^2 + |z|^10 + eps*|z|^2 - 1.
struct HypersurfaceParams {
  Rat eps0, c, eps;

  // Throws std::invalid_argument naming the violated bound.
  void validate() const;

  static HypersurfaceParams canonical() {
    return {Rat(1, 100), Rat(9, 4), Rat(1, 4)};
  }
};

struct Hypersurface {
  HermPoly rho;
  std::optional<HypersurfaceParams> params;
};

// The family surface with Re(|z|^2 z^6) encoded as (z^7 zbar + z zbar^7)/2.
Hypersurface make_family(const HypersurfaceParams& params);

// |z|^2 + |w|^2 - 1.
Hypersurface make_unit_sphere();

enum class PointClass { On, Inside, Outside };

// Exact sign decision for rational points.
PointClass classify_point(const Hypersurface& h, const Point2& p);
// Tolerance-banded decision for floating points.
PointClass classify_point(const Hypersurface& h, const DPoint2& p, double tol);

// Holomorphic gradient (rho_z, rho_w) with Zbar frozen at conj(p).
std::pair<ComplexRational, ComplexRational> gradient(const Hypersurface& h, const Point2& p);
std::pair<std::complex<double>, std::complex<double>> gradient(const Hypersurface& h,
                                                               const DPoint2& p);

// Scalar Levi form on the complex tangent vector (rho_w, -rho_z):
//   rho_{z zbar}|rho_w|^2 - 2 Re(rho_{z wbar} rho_w conj(rho_z)) + rho_{w wbar}|rho_z|^2.
// Only the sign is contractual (the tangent vector is unnormalized).
// Throws on a zero gradient ("not a smooth point").
Rat levi_scalar(const Hypersurface& h, const Point2& p);
double levi_scalar(const Hypersurface& h, const DPoint2& p);

struct LeviSample {
  DPoint2 point;
  double grad_norm = 0.0;
  double levi_value = 0.0;
  double rho_residual = 0.0;
};

// Quasi-uniform seeded sample of the family surface: z on a jittered polar
// grid of the admissible disk {s(z) >= 0}, w = sqrt(s(z)) * (16th root of
// unity).  Every point satisfies |rho| <= 1e-12.  Requires family params.
std::vector<DPoint2> sample_surface(const Hypersurface& h, int count, uint64_t seed);

struct ScanReport {
  int n_samples = 0;
  uint64_t seed = 0;
  double min_grad_norm = 0.0;
  double min_levi = 0.0;
  double max_rho_residual = 0.0;
  DPoint2 argmin_grad{}, argmin_levi{};
};

// Min-reduces gradient norm and Levi value over sample_surface output.
// Deterministic for a fixed seed; the reduction is chunked and commutative,
// so the result does not depend on scheduling.
ScanReport scan(const Hypersurface& h, int count, uint64_t seed);

// Exact Gaussian-rational approximation of a surface sample; the exact
// residual rho(p) is reported alongside so downstream exact algebra can
// certify how far off the surface the rationalized point sits.
Point2 rationalize_point(const DPoint2& p, unsigned long den_bound = (1UL << 40));

}  // namespace segrekit

#endif
