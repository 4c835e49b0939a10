#include "segrekit/bounds.hpp"

#include <cmath>

#include "segrekit/numeric_roots.hpp"

namespace segrekit {

Poly DiskPoly::to_poly() const {
  Poly p = Poly::constant(1);
  for (int i = 1; i <= m(); ++i) p.add_term(mono_var(Var::Z, uint32_t(i)), a[i - 1]);
  return p;
}

DiskPoly DiskPoly::from_roots(const std::vector<ComplexRational>& roots) {
  Poly p = Poly::constant(1);
  Poly z = Poly::variable(Var::Z);
  for (const ComplexRational& r : roots) {
    if (r.is_zero()) throw std::invalid_argument("DiskPoly: zero root conflicts with p(0) = 1");
    p *= Poly::constant(1) - ComplexRational(1) / r * z;
  }
  DiskPoly d;
  d.a.resize(std::size_t(p.degree_in(Var::Z)));
  for (int i = 1; i <= int(d.a.size()); ++i) d.a[i - 1] = p.coeff(mono_var(Var::Z, uint32_t(i)));
  return d;
}

BoundConstant c_m_constant(int m) {
  if (m <= 0) throw std::invalid_argument("c_m_constant: m must be positive");
  mpz_class best = 0;
  for (int j = 0; j <= m; ++j) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
    if (b > best) best = b;
  }
  return {m, Rat(best)};
}

namespace {

constexpr double kModulusMargin = 1e-10;

// Root moduli of the squarefree part: repeated roots are deflated exactly
// first (numeric clusters of multiple roots scatter far too widely for a
// margin test).  Borderline simple roots are snapped to Gaussian rationals
// and decided exactly; anything unresolved stays ambiguous.
DiskStatus classify_roots(const Poly& p) {
  Poly deriv = p.derivative(Var::Z);
  Poly sqf = p;
  if (!deriv.is_zero()) {
    Poly g = gcd_univariate(p, deriv, Var::Z);
    if (g.degree_in(Var::Z) > 0) sqf = divide_exact(p, g, Var::Z);
  }

  std::vector<std::complex<double>> coeffs;
  for (const ComplexRational& c : sqf.univariate_coeffs(Var::Z)) coeffs.push_back(c.to_complex());
  std::vector<std::complex<double>> roots = poly_roots(coeffs);

  bool ambiguous = false;
  for (const auto& r : roots) {
    double mod = std::abs(r);
    if (mod >= 1.0 + kModulusMargin) continue;
    if (mod <= 1.0 - kModulusMargin) return DiskStatus::Vanishing;
    ComplexRational snapped = crat_rationalize(r, 1'000'000UL);
    std::array<ComplexRational, kNumVars> at{};
    at[int(Var::Z)] = snapped;
    if (sqf.eval(at).is_zero()) {
      if (snapped.norm2() < 1) return DiskStatus::Vanishing;
    } else {
      ambiguous = true;
    }
  }
  return ambiguous ? DiskStatus::BoundaryAmbiguous : DiskStatus::Nonvanishing;
}

}  // namespace

DiskStatus nonvanishing_on_disk(const DiskPoly& p) {
  if (p.m() == 0) return DiskStatus::Nonvanishing;  // constant 1
  return classify_roots(p.to_poly());
}

Lemma28Report verify_coefficient_bound(const DiskPoly& p) {
  if (nonvanishing_on_disk(p) != DiskStatus::Nonvanishing)
    throw std::invalid_argument("verify_coefficient_bound: polynomial vanishes in the disk");

  Lemma28Report rep;
  rep.m = p.m();
  rep.c_m = c_m_constant(std::max(rep.m, 1)).c_m;

  Rat cm2(rep.c_m * rep.c_m);
  rep.coeff_bound_ok = true;
  for (const ComplexRational& ai : p.a) {
    rep.coeff_bound_ok = rep.coeff_bound_ok && ai.norm2() <= cm2;
    rep.max_coeff_modulus = std::max(rep.max_coeff_modulus, std::sqrt(ai.norm2().get_d()));
  }

  // boundary sampling suffices for the sup by the maximum principle
  std::vector<std::complex<double>> dense(std::size_t(p.m()) + 1);
  dense[0] = 1.0;
  for (int i = 1; i <= p.m(); ++i) dense[std::size_t(i)] = p.a[std::size_t(i - 1)].to_complex();
  const int kBoundary = 2048;
  for (int i = 0; i < kBoundary; ++i) {
    double t = 2.0 * 3.14159265358979323846 * i / kBoundary;
    std::complex<double> zb = std::polar(1.0, t), v = 0.0;
    for (std::size_t k = dense.size(); k-- > 0;) v = v * zb + dense[k];
    rep.sup_estimate = std::max(rep.sup_estimate, std::abs(v));
  }
  rep.sup_bound = rep.m * rep.c_m.get_d() + 1.0;
  rep.sup_ok = rep.sup_estimate <= rep.sup_bound + 1e-9;
  return rep;
}

namespace {

// Rational point on the unit sphere of C^2 = R^4 via stereographic
// projection of a rational point of R^3.
std::pair<ComplexRational, ComplexRational> rational_unit_direction(Rng& rng) {
  Rat t1 = rng.next_rational(8, 8), t2 = rng.next_rational(8, 8), t3 = rng.next_rational(8, 8);
  Rat n(t1 * t1 + t2 * t2 + t3 * t3);
  Rat d(n + 1);
  Rat x0((1 - n) / d), x1(2 * t1 / d), x2(2 * t2 / d), x3(2 * t3 / d);
  return {ComplexRational(x0, x1), ComplexRational(x2, x3)};
}

}  // namespace

Lemma29Report verify_ball_bound(const Poly& p, int n_directions, uint64_t seed) {
  if (p.depends_on(Var::ZB) || p.depends_on(Var::WB))
    throw std::invalid_argument("verify_ball_bound: input must be a polynomial in (z, w)");
  if (!(p.coeff(Monomial{}) == ComplexRational(1)))
    throw std::invalid_argument("verify_ball_bound: p(0) = 1 required");

  Lemma29Report rep;
  rep.m = std::max(p.degree({Var::Z, Var::W}), 1);
  rep.n_directions = n_directions;
  rep.seed = seed;
  rep.c_m = c_m_constant(rep.m).c_m;
  rep.sup_bound = rep.m * rep.c_m.get_d() + 1.0;

  Rng rng = Rng(seed).derive("ball-slices");
  rep.all_slices_ok = true;
  for (int i = 0; i < n_directions; ++i) {
    auto [u1, u2] = rational_unit_direction(rng);
    Poly t = Poly::variable(Var::ZB);  // slice parameter
    Poly sliced = p.substitute(Var::Z, Poly(u1) * t).substitute(Var::W, Poly(u2) * t);

    DiskPoly slice;
    int d = sliced.degree_in(Var::ZB);
    slice.a.resize(std::size_t(std::max(d, 0)));
    for (int j = 1; j <= d; ++j) slice.a[j - 1] = sliced.coeff(mono_var(Var::ZB, uint32_t(j)));

    if (nonvanishing_on_disk(slice) != DiskStatus::Nonvanishing)
      throw std::runtime_error("verify_ball_bound: hypothesis violated, witness direction (" +
                               u1.to_string() + ", " + u2.to_string() + ")");
    Lemma28Report r28 = verify_coefficient_bound(slice);
    rep.all_slices_ok = rep.all_slices_ok && r28.coeff_bound_ok && r28.sup_ok;
    rep.max_slice_coeff = std::max(rep.max_slice_coeff, r28.max_coeff_modulus);
  }

  const double sqrt_n = std::sqrt(2.0);
  for (int k = 0; k <= rep.m; ++k)
    rep.coeff_bounds.push_back(rep.sup_bound * std::pow(sqrt_n, k));
  return rep;
}

std::vector<double> cauchy_coeff_bound(double sup_bound, double r, int total_degree_cap) {
  if (sup_bound < 0) throw std::invalid_argument("cauchy_coeff_bound: negative sup bound");
  if (!(r > 0)) throw std::invalid_argument("cauchy_coeff_bound: radius must be positive");
  double s = r / std::sqrt(2.0);
  std::vector<double> out;
  for (int k = 0; k <= total_degree_cap; ++k) out.push_back(sup_bound / std::pow(s, k));
  return out;
}

bool certify_ball_radius(const Rat& eps0, const Rat& c, const Rat& r) {
  Rat r2(r * r);
  Rat r8(r2 * r2 * r2 * r2);
  Rat majorant(eps0 * (1 + c) * r8 + 2 * r2 + r8 * r2 - 1);
  return majorant < 0;
}

bool random_disk_trial(Rng& rng, int m) {
  // roots certified outside the open disk by construction (|root|^2 >= 1
  // exactly), so the hypothesis holds and the conclusions are checked
  // directly: coefficients exactly, the sup on boundary samples
  std::vector<ComplexRational> roots;
  while (int(roots.size()) < m) {
    ComplexRational r = rng.next_crat(12, 4);
    Rat n2 = r.norm2();
    if (n2 == 0) continue;
    if (n2 < 1) {
      long f = 2;
      while (n2 * f * f < 1) f *= 2;
      r = ComplexRational(Rat(f)) * r;
      n2 = r.norm2();
    }
    if (n2 > 16) continue;
    roots.push_back(r);
  }
  DiskPoly p = DiskPoly::from_roots(roots);
  Rat cm = c_m_constant(m).c_m;
  Rat cm2(cm * cm);
  for (const ComplexRational& ai : p.a)
    if (ai.norm2() > cm2) return false;

  std::vector<std::complex<double>> dense(std::size_t(m) + 1);
  dense[0] = 1.0;
  for (int i = 1; i <= m; ++i) dense[std::size_t(i)] = p.a[std::size_t(i - 1)].to_complex();
  double sup_bound = m * cm.get_d() + 1.0;
  const int kBoundary = 256;
  for (int i = 0; i < kBoundary; ++i) {
    double t = 2.0 * 3.14159265358979323846 * i / kBoundary;
    std::complex<double> zb = std::polar(1.0, t), v = 0.0;
    for (std::size_t k = dense.size(); k-- > 0;) v = v * zb + dense[k];
    if (std::abs(v) > sup_bound + 1e-9) return false;
  }
  return true;
}

}  // namespace segrekit
