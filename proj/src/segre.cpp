#include "segrekit/segre.hpp"

#include <cmath>

namespace segrekit {

namespace {
ComplexRational cpow(const ComplexRational& x, int k) {
  ComplexRational r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}
}  // namespace

Poly segre_graph(const HypersurfaceParams& params, const Point2& p) {
  params.validate();
  if (p.w.is_zero())
    throw std::domain_error("segre_graph: graph form unavailable (w_p = 0)");
  ComplexRational zb = p.z.conj();
  ComplexRational wb = p.w.conj();
  ComplexRational e0(params.eps0), eps(params.eps);
  ComplexRational half_c(Rat(params.c / 2));

  Poly num;
  num.add_term(mono_var(Var::Z, 4), e0 * cpow(zb, 4));
  num.add_term(mono_var(Var::Z, 7), e0 * half_c * zb);
  num.add_term(mono_var(Var::Z, 1), e0 * half_c * cpow(zb, 7));
  num.add_term(mono_var(Var::Z, 5), cpow(zb, 5));
  num.add_term(mono_var(Var::Z, 1), eps * zb);
  num.add_term(Monomial{}, ComplexRational(-1));
  return (ComplexRational(-1) / wb) * num;
}

Poly segre_implicit(const Hypersurface& h, const Point2& p) {
  Poly rc = h.rho.complexify();
  rc = rc.substitute(Var::ZB, Poly(p.z.conj()));
  rc = rc.substitute(Var::WB, Poly(p.w.conj()));
  return rc;
}

bool segre_contains(const Hypersurface& h, const Point2& p, const Point2& q) {
  // q in Q_p  <=>  rho_c(q, conj(p)) = 0
  return h.rho.complexify().eval({q.z, q.w, p.z.conj(), p.w.conj()}).is_zero();
}

Point2 reflection(const HypersurfaceParams& params, const ComplexRational& xi, const Point2& p) {
  if (p.w.is_zero()) throw std::domain_error("reflection: undefined for w_p = 0");
  Poly phi = segre_graph(params, p);
  std::array<ComplexRational, kNumVars> at{};
  at[static_cast<int>(Var::Z)] = xi;
  return {xi, phi.eval(at)};
}

SphereSegreReport sphere_segre_unique_intersection(const std::vector<std::complex<double>>& q,
                                                   int trials, uint64_t seed) {
  const int n = static_cast<int>(q.size());
  if (n < 1) throw std::invalid_argument("sphere_segre: empty base point");
  double norm2 = 0.0;
  for (const auto& c : q) norm2 += std::norm(c);
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("sphere_segre: base point is not a unit vector");

  Rng rng = Rng(seed).derive("sphere-segre");
  SphereSegreReport rep;
  rep.dimension = n;
  rep.trials = trials;
  rep.seed = seed;

  for (int t = 0; t < trials; ++t) {
    // random point, then orthogonal projection onto the hyperplane <Z, q> = 1
    std::vector<std::complex<double>> zp(n);
    std::complex<double> inner = 0.0;
    for (int j = 0; j < n; ++j) {
      zp[j] = {2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0};
      inner += zp[j] * std::conj(q[j]);
    }
    for (int j = 0; j < n; ++j) zp[j] -= (inner - 1.0) * q[j];

    // Z' = q + v with <v, q> = 0, so |Z'|^2 = 1 + |v|^2
    double zp2 = 0.0, v2 = 0.0;
    for (int j = 0; j < n; ++j) {
      zp2 += std::norm(zp[j]);
      v2 += std::norm(zp[j] - q[j]);
    }
    double resid = std::abs(zp2 - 1.0 - v2);
    rep.max_identity_residual = std::max(rep.max_identity_residual, resid);

    // the unit points on the hyperplane are q + t*v with 1 = |q|^2 + t^2|v|^2;
    // reconstruct with the measured |q|^2 and report the distance |t||v| from q
    double t2 = (v2 > 0.0) ? std::max(0.0, (1.0 - norm2) / v2) : 0.0;
    rep.max_reconstruction_gap = std::max(rep.max_reconstruction_gap, std::sqrt(t2 * v2));
  }
  rep.pass = rep.max_identity_residual < 1e-12 && rep.max_reconstruction_gap < 1e-12;
  return rep;
}

bool sphere_segre_rigidity_exact(const std::vector<ComplexRational>& q,
                                 const std::vector<ComplexRational>& v) {
  if (q.size() != v.size()) throw std::invalid_argument("rigidity: size mismatch");
  Rat qn(0), vn(0);
  ComplexRational inner(0);
  for (std::size_t j = 0; j < q.size(); ++j) {
    qn += q[j].norm2();
    vn += v[j].norm2();
    inner += v[j] * q[j].conj();
  }
  if (qn != 1) throw std::invalid_argument("rigidity: q is not a unit vector");
  if (!inner.is_zero()) throw std::invalid_argument("rigidity: v is not orthogonal to q");
  Rat lhs(0);
  for (std::size_t j = 0; j < q.size(); ++j) lhs += (q[j] + v[j]).norm2();
  return lhs == 1 + vn;
}

}  // namespace segrekit
