#include <doctest.h>

#include "segrekit/hypersurface.hpp"

using namespace segrekit;

namespace {

// Independent finite-difference oracle for the holomorphic gradient:
// rho_z = (d/dx - i d/dy)/2 of the real function rho, per coordinate.
std::pair<std::complex<double>, std::complex<double>> gradient_fd(const Hypersurface& h,
                                                                  const DPoint2& p, double step) {
  auto f = [&](std::complex<double> z, std::complex<double> w) {
    return h.rho.eval_real_double(z, w);
  };
  auto wirtinger = [&](int coord) {
    std::complex<double> dx, dy;
    if (coord == 0) {
      dx = (f(p.z + step, p.w) - f(p.z - step, p.w)) / (2 * step);
      dy = (f(p.z + std::complex<double>(0, step), p.w) -
            f(p.z - std::complex<double>(0, step), p.w)) /
           (2 * step);
    } else {
      dx = (f(p.z, p.w + step) - f(p.z, p.w - step)) / (2 * step);
      dy = (f(p.z, p.w + std::complex<double>(0, step)) -
            f(p.z, p.w - std::complex<double>(0, step))) /
           (2 * step);
    }
    return 0.5 * (dx - std::complex<double>(0, 1) * dy);
  };
  return {wirtinger(0), wirtinger(1)};
}

// Independent Levi oracle: the (1,1)-Hessian of rho on the tangent vector
// v = (rho_w, -rho_z) via a complex-line Laplacian, d/dt d/dtbar rho(p + t v)
// = (1/4) Laplacian_t, with the centered 5-point stencil.
double levi_fd(const Hypersurface& h, const DPoint2& p, double step) {
  auto [gz, gw] = gradient(h, p);
  std::complex<double> vz = gw, vw = -gz;
  auto f = [&](std::complex<double> t) {
    return h.rho.eval_real_double(p.z + t * vz, p.w + t * vw);
  };
  double lap = (f(step) + f(-step) + f(std::complex<double>(0, step)) +
                f(std::complex<double>(0, -step)) - 4.0 * f(0.0)) /
               (step * step);
  return lap / 4.0;
}

// Exact rational point on the unit sphere of C^2.
Point2 rational_sphere_point(Rng& rng) {
  Rat t = rng.next_rational(32, 8);
  Rat den(1 + t * t);
  Rat r((1 - t * t) / den), s(2 * t / den);  // r^2 + s^2 = 1
  return {ComplexRational(r) * rng.next_rational_unit(),
          ComplexRational(s) * rng.next_rational_unit()};
}

}  // namespace

TEST_CASE("parameter validation names the violated bound") {
  CHECK_THROWS_WITH_AS(make_family({Rat(0), Rat(9, 4), Rat(0)}), "params: eps0 > 0 violated",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_family({Rat(1, 100), Rat(2), Rat(0)}),
                       "params: 2 < c < 16/7 violated", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_family({Rat(1, 100), Rat(16, 7), Rat(0)}),
                       "params: 2 < c < 16/7 violated", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_family({Rat(1, 100), Rat(9, 4), Rat(1)}),
                       "params: 0 <= eps < 1 violated", std::invalid_argument);
}

TEST_CASE("family construction matches the defining formula") {
  Hypersurface h = make_family({Rat(1, 100), Rat(9, 4), Rat(1, 4)});
  CHECK(h.rho.coeff(mono(0, 1, 0, 1)) == ComplexRational(1));   // |w|^2
  CHECK(h.rho.coeff(Monomial{}) == ComplexRational(-1));         // constant
  CHECK(h.rho.coeff(mono(4, 0, 4, 0)) == ComplexRational(Rat(1, 100)));
  CHECK(h.rho.coeff(mono(7, 0, 1, 0)) == ComplexRational(Rat(9, 800)));
  CHECK(h.rho.coeff(mono(1, 0, 1, 0)) == ComplexRational(Rat(1, 4)));
  CHECK(HermPoly::is_hermitian(h.rho.complexify()));

  CHECK(h.rho.eval_real(ComplexRational(0), ComplexRational(1)) == 0);
  CHECK(h.rho.eval_real(ComplexRational(0), ComplexRational(0)) == -1);
}

TEST_CASE("point classification is exact on rational inputs") {
  Hypersurface h = make_family(HypersurfaceParams::canonical());
  CHECK(classify_point(h, Point2{ComplexRational(0), ComplexRational(1)}) == PointClass::On);
  CHECK(classify_point(h, Point2{ComplexRational(0), ComplexRational(0)}) == PointClass::Inside);
  Point2 outside{ComplexRational(0), ComplexRational(2)};
  CHECK(classify_point(h, outside) == PointClass::Outside);
  CHECK(h.rho.eval_real(outside.z, outside.w) == 3);
  CHECK(classify_point(h, DPoint2{0.0, 1.0}, 1e-12) == PointClass::On);
}

TEST_CASE("gradient: closed forms and finite-difference oracle") {
  Hypersurface h = make_family(HypersurfaceParams::canonical());
  auto [gz, gw] = gradient(h, Point2{ComplexRational(0), ComplexRational(1)});
  CHECK(gz == ComplexRational(0));
  CHECK(gw == ComplexRational(1));

  Hypersurface sphere = make_unit_sphere();
  auto [sz, sw] = gradient(sphere, Point2{ComplexRational(1), ComplexRational(0)});
  CHECK(sz == ComplexRational(1));
  CHECK(sw == ComplexRational(0));

  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    DPoint2 p{{rng.next_double() - 0.5, rng.next_double() - 0.5},
              {rng.next_double() - 0.5, rng.next_double() + 0.5}};
    auto [fz, fw] = gradient_fd(h, p, 1e-5);
    auto [az, aw] = gradient(h, p);
    CHECK(std::abs(fz - az) <= 1e-8 * std::max(1.0, std::abs(az)));
    CHECK(std::abs(fw - aw) <= 1e-8 * std::max(1.0, std::abs(aw)));
  }
}

TEST_CASE("levi scalar: sphere benchmark, family value, oracle, scaling") {
  Hypersurface sphere = make_unit_sphere();
  CHECK(levi_scalar(sphere, Point2{ComplexRational(0), ComplexRational(1)}) == 1);

  // every rational sphere point gives exactly 1
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    Point2 p = rational_sphere_point(rng);
    CHECK(levi_scalar(sphere, p) == 1);
  }

  // family at (0, 1): only rho_{z zbar} = eps survives against |rho_w|^2 = 1
  Hypersurface h = make_family(HypersurfaceParams::canonical());
  CHECK(levi_scalar(h, Point2{ComplexRational(0), ComplexRational(1)}) == Rat(1, 4));

  // finite-difference oracle at generic points
  for (int i = 0; i < 10; ++i) {
    DPoint2 p{{0.4 * rng.next_double(), 0.4 * rng.next_double()},
              {rng.next_double(), 0.5 + rng.next_double()}};
    double fd = levi_fd(h, p, 1e-4);
    double an = levi_scalar(h, p);
    CHECK(std::abs(fd - an) <= 1e-5 * std::max(1.0, std::abs(an)));
  }

  // positive rescaling of rho preserves the sign; the value scales cubically
  for (const Rat& k : {Rat(1, 2), Rat(3)}) {
    HermPoly scaled = h.rho.scale(ComplexRational(k));
    Hypersurface hs{scaled, h.params};
    Point2 p{ComplexRational(Rat(1, 8), Rat(1, 16)), ComplexRational(1)};
    Rat a = levi_scalar(hs, p), b = levi_scalar(h, p);
    CHECK(a == Rat(k * k * k) * b);
    CHECK((a > 0) == (b > 0));
  }

  CHECK_THROWS_WITH_AS(levi_scalar(h, Point2{ComplexRational(0), ComplexRational(0)}),
                       "levi_scalar: not a smooth point (zero gradient)", std::domain_error);
}

TEST_CASE("exact and floating levi paths agree") {
  Hypersurface h = make_family(HypersurfaceParams::canonical());
  Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    ComplexRational z = rng.next_crat(4, 8), w = rng.next_crat(8, 8);
    if (z.is_zero() && w.is_zero()) continue;
    Point2 p{z, w};
    double exact_rounded = rat_to_double(levi_scalar(h, p));
    double floating = levi_scalar(h, to_double(p));
    CHECK(std::abs(floating - exact_rounded) <= 1e-9 * std::max(1.0, std::abs(exact_rounded)));
  }
}

TEST_CASE("surface sampler: z = 0 slice, residuals, determinism") {
  Hypersurface h = make_family(HypersurfaceParams::canonical());
  std::vector<DPoint2> pts = sample_surface(h, 200, 42);

  for (int k = 0; k < 16; ++k) {
    CHECK(std::abs(pts[k].z) == 0.0);
    CHECK(std::abs(std::abs(pts[k].w) - 1.0) <= 1e-15);
  }
  for (const DPoint2& p : pts)
    CHECK(classify_point(h, p, 1e-10) == PointClass::On);

  std::vector<DPoint2> again = sample_surface(h, 200, 42);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i].z == again[i].z);
    CHECK(pts[i].w == again[i].w);
  }
  CHECK_THROWS_AS(sample_surface(h, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_surface(make_unit_sphere(), 10, 1), std::invalid_argument);
}

TEST_CASE("scan aggregates deterministically") {
  Hypersurface h = make_family(HypersurfaceParams::canonical());
  ScanReport a = scan(h, 2000, 7), b = scan(h, 2000, 7);
  CHECK(a.min_levi == b.min_levi);
  CHECK(a.min_grad_norm == b.min_grad_norm);
  CHECK(a.argmin_levi.z == b.argmin_levi.z);
  CHECK(a.min_levi > 0);
  CHECK(a.min_grad_norm > 0);
  CHECK(a.max_rho_residual <= 1e-12);

  // the undeformed surface degenerates: its minimum drops below the eps = 1/4 one
  Hypersurface h0 = make_family({Rat(1, 100), Rat(9, 4), Rat(0)});
  ScanReport s0 = scan(h0, 2000, 7);
  CHECK(s0.min_levi >= -1e-9);
  CHECK(s0.min_levi < a.min_levi);
}
