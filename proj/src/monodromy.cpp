#include "segrekit/monodromy.hpp"

#include <algorithm>
#include <cmath>

#include "segrekit/numeric_roots.hpp"
#include "segrekit/rational_function.hpp"

namespace segrekit {

namespace {
constexpr double kNewtonTol = 1e-12;
constexpr double kCollisionFactor = 10.0;
// fiber-distance form of the locus-clearance requirement: nodes must keep
// the sheets separated at least this far apart
constexpr double kMinSheetSeparation = 1e-6;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

void AlgebraicFunction::validate() const {
  if (coeffs.size() < 2)
    throw std::invalid_argument("AlgebraicFunction: deg_F >= 1 required");
  std::vector<std::complex<double>> fib = fiber(base);
  std::complex<double> v = 0.0;
  for (std::size_t k = fib.size(); k-- > 0;) v = v * base_value + fib[k];
  if (std::abs(v) >= 1e-12)
    throw std::invalid_argument("AlgebraicFunction: branch value does not satisfy P = 0");
}

std::vector<std::complex<double>> AlgebraicFunction::fiber(const DPoint2& p) const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs.size());
  for (const Poly& c : coeffs) out.push_back(c.eval_double({p.z, p.w, 0.0, 0.0}));
  return out;
}

void Loop::validate() const {
  if (points.size() < 256) throw std::invalid_argument("Loop: at least 256 nodes required");
  if (std::abs(points.front().z - points.back().z) > 1e-14 ||
      std::abs(points.front().w - points.back().w) > 1e-14)
    throw std::invalid_argument("Loop: path is not closed");
}

Loop Loop::circle_w(std::complex<double> z, std::complex<double> w_center, double radius,
                    int nodes, int turns) {
  Loop l;
  const int total = nodes * turns;
  l.points.reserve(std::size_t(total) + 1);
  for (int i = 0; i <= total; ++i) {
    double t = 2.0 * kPi * i / nodes;
    l.points.push_back({z, w_center + std::polar(radius, t)});
  }
  // close exactly
  l.points.back() = l.points.front();
  return l;
}

Loop Loop::reversed() const {
  Loop l;
  l.points.assign(points.rbegin(), points.rend());
  return l;
}

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> x) {
  std::complex<double> v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

std::complex<double> horner_deriv(const std::vector<std::complex<double>>& c,
                                  std::complex<double> x) {
  std::complex<double> v = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) v = v * x + double(k) * c[k];
  return v;
}

}  // namespace

std::complex<double> track_branch(const AlgebraicFunction& f, const Loop& loop) {
  f.validate();
  loop.validate();

  std::complex<double> value = f.base_value;
  for (const DPoint2& node : loop.points) {
    std::vector<std::complex<double>> fib = f.fiber(node);

    // corrector: Newton from the previous value
    std::complex<double> x = value;
    bool converged = false;
    for (int it = 0; it < 50; ++it) {
      std::complex<double> fv = horner(fib, x);
      if (std::abs(fv) < kNewtonTol) {
        converged = true;
        break;
      }
      std::complex<double> dv = horner_deriv(fib, x);
      if (std::abs(dv) < 1e-300) break;
      x -= fv / dv;
    }
    if (!converged || std::abs(x - value) > 0.5)
      throw std::runtime_error("track_branch: refine loop (corrector diverged)");

    // branch-distance guard against silent sheet jumps: the second-nearest
    // fiber root must stay clear of the tracked one
    std::vector<double> dist;
    for (const auto& r : poly_roots(fib)) dist.push_back(std::abs(r - x));
    std::sort(dist.begin(), dist.end());
    double floor = std::max(kCollisionFactor * kNewtonTol, kMinSheetSeparation);
    if (dist.size() >= 2 && dist[1] < floor)
      throw std::runtime_error("track_branch: refine loop (branch collision)");

    value = x;
  }

  // final residual at the base point
  std::vector<std::complex<double>> fib = f.fiber(loop.points.back());
  if (std::abs(horner(fib, value)) >= 1e-9)
    throw std::runtime_error("track_branch: final residual too large");
  return value;
}

SqrtDemoReport sqrt_w_demo() {
  SqrtDemoReport rep;

  // g = sqrt(w): P = F^2 - w, based at w = 4 with branch value 2
  AlgebraicFunction g;
  g.coeffs = {-Poly::variable(Var::W), Poly(), Poly::constant(1)};
  g.base = {0.0, 4.0};
  g.base_value = 2.0;

  Loop once = Loop::circle_w(0.0, 0.0, 4.0, 512, 1);
  Loop twice = Loop::circle_w(0.0, 0.0, 4.0, 512, 2);
  rep.start = g.base_value;
  rep.after_one_loop = track_branch(g, once);
  rep.after_two_loops = track_branch(g, twice);
  rep.swap_residual = std::abs(rep.after_one_loop + rep.start);
  rep.return_residual = std::abs(rep.after_two_loops - rep.start);

  // Segre restriction of g^2 on |w|^2 = (1+|z|^2)^2, derived from the
  // defining polynomial: the implicit form at (z0, w0) is linear in w, so
  // the graph eta(xi) falls out by division, and g^2 = w restricts to it.
  ComplexRational z0(Rat(1)), w0(Rat(4));
  Poly zzb = Poly::variable(Var::Z) * Poly::variable(Var::ZB);
  Poly one = Poly::constant(1);
  HermPoly surface(Poly::variable(Var::W) * Poly::variable(Var::WB) - (one + zzb) * (one + zzb));
  Poly implicit = surface.complexify()
                      .substitute(Var::ZB, Poly(z0.conj()))
                      .substitute(Var::WB, Poly(w0.conj()));
  ComplexRational w_coeff = implicit.coeff(mono_var(Var::W));
  Poly minus_rest = -implicit.substitute(Var::W, Poly());
  RationalFunction eta(minus_rest, Poly(w_coeff), Var::Z);

  Poly lin = one + z0.conj() * Poly::variable(Var::Z);
  RationalFunction expected(lin * lin, Poly(w0.conj()), Var::Z);
  rep.restriction_exact = eta == expected && eta.num().degree_in(Var::Z) == 2;
  rep.restriction_numerator_degree = eta.num().degree_in(Var::Z);

  rep.pass = rep.swap_residual < 1e-9 && rep.return_residual < 1e-9 && rep.restriction_exact;
  return rep;
}

}  // namespace segrekit
