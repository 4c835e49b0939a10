#include <doctest.h>

#include "segrekit/monodromy.hpp"

using namespace segrekit;

namespace {

AlgebraicFunction sqrt_w(std::complex<double> base_w, std::complex<double> value) {
  AlgebraicFunction f;
  f.coeffs = {-Poly::variable(Var::W), Poly(), Poly::constant(1)};  // F^2 - w
  f.base = {0.0, base_w};
  f.base_value = value;
  return f;
}

}  // namespace

TEST_CASE("two-sheeted branch swap around w = 0") {
  AlgebraicFunction f = sqrt_w(1.0, 1.0);
  Loop once = Loop::circle_w(0.0, 0.0, 1.0, 512, 1);
  std::complex<double> v1 = track_branch(f, once);
  CHECK(std::abs(v1 + 1.0) < 1e-9);

  Loop twice = Loop::circle_w(0.0, 0.0, 1.0, 512, 2);
  std::complex<double> v2 = track_branch(f, twice);
  CHECK(std::abs(v2 - 1.0) < 1e-9);
}

TEST_CASE("a constant branch is fixed by every loop") {
  AlgebraicFunction c;
  c.coeffs = {Poly::constant(-3), Poly::constant(1)};  // F - 3
  c.base = {0.0, 1.0};
  c.base_value = 3.0;
  Loop loop = Loop::circle_w(0.0, 0.0, 1.0, 512, 1);
  CHECK(std::abs(track_branch(c, loop) - 3.0) < 1e-12);
}

TEST_CASE("loop reversal inverts the monodromy action") {
  AlgebraicFunction f = sqrt_w(4.0, 2.0);
  Loop loop = Loop::circle_w(0.0, 0.0, 4.0, 512, 1);
  std::complex<double> mid = track_branch(f, loop);
  AlgebraicFunction g = sqrt_w(4.0, mid);
  std::complex<double> back = track_branch(g, loop.reversed());
  CHECK(std::abs(back - 2.0) < 1e-9);
}

TEST_CASE("tracking converges under step refinement") {
  AlgebraicFunction f = sqrt_w(4.0, 2.0);
  std::complex<double> coarse = track_branch(f, Loop::circle_w(0.0, 0.0, 4.0, 512, 1));
  std::complex<double> fine = track_branch(f, Loop::circle_w(0.0, 0.0, 4.0, 1024, 1));
  CHECK(std::abs(coarse - fine) < 1e-8);
}

TEST_CASE("validation and collision guards") {
  AlgebraicFunction f = sqrt_w(1.0, 1.0);

  Loop tiny = Loop::circle_w(0.0, 0.0, 1.0, 64, 1);
  CHECK_THROWS_AS(track_branch(f, tiny), std::invalid_argument);

  Loop open = Loop::circle_w(0.0, 0.0, 1.0, 512, 1);
  open.points.back().w += 0.1;
  CHECK_THROWS_AS(track_branch(f, open), std::invalid_argument);

  AlgebraicFunction bad = sqrt_w(1.0, 1.5);  // 1.5^2 != 1
  CHECK_THROWS_AS(track_branch(bad, Loop::circle_w(0.0, 0.0, 1.0, 512, 1)),
                  std::invalid_argument);

  AlgebraicFunction lin;
  lin.coeffs = {Poly::constant(-1)};  // degree 0 in F
  lin.base = {0.0, 1.0};
  lin.base_value = 1.0;
  CHECK_THROWS_AS(track_branch(lin, Loop::circle_w(0.0, 0.0, 1.0, 512, 1)),
                  std::invalid_argument);

  // a loop through w = 0 collapses the two sheets: conservative failure
  AlgebraicFunction g = sqrt_w(2.0, std::sqrt(2.0));
  Loop through_zero = Loop::circle_w(0.0, 1.0, 1.0, 512, 1);
  CHECK_THROWS_AS(track_branch(g, through_zero), std::runtime_error);
}

TEST_CASE("the full demo report") {
  SqrtDemoReport rep = sqrt_w_demo();
  CHECK(rep.pass);
  CHECK(rep.swap_residual < 1e-9);
  CHECK(rep.return_residual < 1e-9);
  CHECK(rep.restriction_exact);
  CHECK(rep.restriction_numerator_degree == 2);
}

TEST_CASE("restriction of the square at the degenerate base point") {
  // at (0, 1) the Segre graph of |w|^2 = (1 + |z|^2)^2 is constant 1, so the
  // restricted square has degree 0 and the branch values are +-1
  Poly zzb = Poly::variable(Var::Z) * Poly::variable(Var::ZB);
  Poly one = Poly::constant(1);
  HermPoly surface(Poly::variable(Var::W) * Poly::variable(Var::WB) - (one + zzb) * (one + zzb));
  Poly implicit = surface.complexify()
                      .substitute(Var::ZB, Poly(ComplexRational(0)))
                      .substitute(Var::WB, Poly(ComplexRational(1)));
  ComplexRational w_coeff = implicit.coeff(mono_var(Var::W));
  Poly minus_rest = -implicit.substitute(Var::W, Poly());
  CHECK(w_coeff == ComplexRational(1));
  CHECK(minus_rest == one);
}
