#ifndef SEGREKIT_MONODROMY_HPP
#define SEGREKIT_MONODROMY_HPP

#include <complex>
#include <vector>

#include "segrekit/hypersurface.hpp"

namespace segrekit {

// Algebraic function germ: a branch of P(z, w, F) = 0 through base_value at
// base.  The defining polynomial is stored F-adically: coeffs[k] is the
// (z, w)-polynomial multiplying F^k, and deg_F = coeffs.size() - 1 >= 1.
struct AlgebraicFunction {
  std::vector<Poly> coeffs;
  DPoint2 base;
  std::complex<double> base_value;

  // Validates deg_F >= 1 and |P(base, base_value)| < 1e-12.
  void validate() const;

  // Fiber polynomial in F over a point, dense coefficients by F-power.
  std::vector<std::complex<double>> fiber(const DPoint2& p) const;
};

// Discretized closed path in C^2 with at least 256 nodes.
struct Loop {
  std::vector<DPoint2> points;

  void validate() const;

  // Circle of radius |around the w-plane|: (z fixed, w = center + radius e^{it}).
  static Loop circle_w(std::complex<double> z, std::complex<double> w_center, double radius,
                       int nodes = 512, int turns = 1);

  Loop reversed() const;
};

// Predictor-corrector continuation of the branch along the loop; the final
// value is the analytic continuation back at the base point.  Throws
// "refine loop" when Newton stalls or two fiber roots collapse within 10x
// the corrector tolerance.
std::complex<double> track_branch(const AlgebraicFunction& f, const Loop& loop);

struct SqrtDemoReport {
  // branch swap of sqrt(w) around {w = 0}
  std::complex<double> start = 0.0, after_one_loop = 0.0, after_two_loops = 0.0;
  double swap_residual = 0.0;    // |after_one_loop + start|
  double return_residual = 0.0;  // |after_two_loops - start|
  // Segre restriction of g^2 = w on |w|^2 = (1 + |z|^2)^2 at (1, 4):
  // eta(xi) = (1 + conj(z) xi)^2 / conj(w), numerator degree 2, exactly
  bool restriction_exact = false;
  int restriction_numerator_degree = 0;
  bool pass = false;
};

// The two-sheeted model: g = sqrt(w) swaps branches around {w = 0}, yet its
// restriction to every Segre variety of |w|^2 = (1 + |z|^2)^2 is a degree-1
// polynomial in xi (checked by squaring, exactly).
SqrtDemoReport sqrt_w_demo();

}  // namespace segrekit

#endif
