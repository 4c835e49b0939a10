#include "segrekit/embedding.hpp"

#include <cmath>

#include "segrekit/quadext.hpp"

namespace segrekit {

namespace {

Rat sqrt_or_throw(const Rat& v, const char* name) {
  Rat root;
  if (!rat_sqrt_exact(v, &root))
    throw std::invalid_argument(std::string("remark_212_map: ") + name +
                                " is not a rational square; use the symbolic check");
  return root;
}

}  // namespace

RationalMap remark_212_map(const HypersurfaceParams& params) {
  params.validate();
  Rat s1 = sqrt_or_throw(params.eps0, "eps0");
  Rat s2 = sqrt_or_throw(Rat(params.eps0 * params.c / 4), "eps0*c/4");
  Rat s3 = sqrt_or_throw(params.eps, "eps");

  Poly z = Poly::variable(Var::Z), w = Poly::variable(Var::W);
  Poly z4 = z.pow(4), z5 = z.pow(5), z7 = z.pow(7);
  std::vector<Poly> comps = {
      ComplexRational(s1) * z4,
      ComplexRational(s2) * (z7 + z),
      w,
      z5,
      ComplexRational(s3) * z,
      ComplexRational(s2) * (z7 - z),
  };
  return RationalMap::make(std::move(comps), Poly::constant(1));
}

IdentityReport verify_identity(const HypersurfaceParams& params) {
  RationalMap F = remark_212_map(params);
  Hypersurface h = make_family(params);
  Signature sig = hyperquadric_signature();

  Poly sum;
  for (int j = 0; j < 6; ++j) {
    Poly sq = HermPoly::squared_modulus(F.numerators()[j]).complexify();
    sum += sig.weight(j) > 0 ? sq : -sq;
  }
  IdentityReport rep;
  rep.difference = sum - Poly::constant(1) - h.rho.complexify();
  rep.pass = rep.difference.is_zero();
  return rep;
}

bool verify_identity_symbolic(const Rat& eps0, const Rat& c, const Rat& eps) {
  HypersurfaceParams{eps0, c, eps}.validate();
  using QPoly = PolynomialT<QuadExt>;
  auto squares = std::make_shared<const QuadExt::Squares>(
      QuadExt::Squares{eps0, Rat(eps0 * c / 4), eps});
  QuadExt s1 = QuadExt::generator(0, squares);
  QuadExt s2 = QuadExt::generator(1, squares);
  QuadExt s3 = QuadExt::generator(2, squares);

  QPoly z = QPoly::variable(Var::Z), w = QPoly::variable(Var::W);
  QPoly z7 = z.pow(7);
  std::vector<QPoly> comps = {
      s1 * z.pow(4), s2 * (z7 + z), w, z.pow(5), s3 * z, s2 * (z7 - z)};

  QPoly sum;
  Signature sig = hyperquadric_signature();
  for (int j = 0; j < 6; ++j) {
    QPoly sq = comps[j] * comps[j].conjugate();
    sum += sig.weight(j) > 0 ? sq : QPoly() - sq;
  }

  // rho with the parameters embedded as the squares of the generators
  QPoly rho;
  rho += QuadExt(eps0) * (z.pow(4) * QPoly::variable(Var::ZB).pow(4));
  QuadExt half_c0(Rat(eps0 * c / 2));
  rho += half_c0 * (z.pow(7) * QPoly::variable(Var::ZB));
  rho += half_c0 * (z * QPoly::variable(Var::ZB).pow(7));
  rho += w * QPoly::variable(Var::WB);
  rho += z.pow(5) * QPoly::variable(Var::ZB).pow(5);
  rho += QuadExt(eps) * (z * QPoly::variable(Var::ZB));
  rho += QPoly(QuadExt(-1L));

  QPoly diff = sum - QPoly(QuadExt(1L)) - rho;
  return diff.is_zero();
}

bool verify_quarter_identity() {
  Poly z = Poly::variable(Var::Z);
  Poly z7 = z.pow(7);
  Poly plus = HermPoly::squared_modulus(z7 + z).complexify();
  Poly minus = HermPoly::squared_modulus(z7 - z).complexify();
  Poly quarter = ComplexRational(Rat(1, 4)) * (plus - minus);

  Poly re_term;
  re_term.add_term(mono(7, 0, 1, 0), ComplexRational(Rat(1, 2)));
  re_term.add_term(mono(1, 0, 7, 0), ComplexRational(Rat(1, 2)));
  return (quarter - re_term).is_zero();
}

ImmersionReport immersion_check(const HypersurfaceParams& params, int n_samples, uint64_t seed) {
  RationalMap F = remark_212_map(params);
  Hypersurface h = make_family(params);

  ImmersionReport rep;
  rep.n_samples = n_samples;
  rep.seed = seed;
  rep.min_jacobian_minor = std::numeric_limits<double>::infinity();
  rep.min_image_separation = std::numeric_limits<double>::infinity();

  std::vector<Poly> dz, dw;
  for (const Poly& p : F.numerators()) {
    dz.push_back(p.derivative(Var::Z));
    dw.push_back(p.derivative(Var::W));
  }

  std::vector<DPoint2> pts = sample_surface(h, n_samples, seed);
  std::vector<std::array<std::complex<double>, 6>> images(pts.size());

  Signature sig = hyperquadric_signature();
  rep.full_rank_everywhere = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::array<std::complex<double>, kNumVars> at{pts[i].z, pts[i].w, 0.0, 0.0};
    double best_minor = 0.0;
    std::vector<std::complex<double>> jz, jw;
    for (int j = 0; j < 6; ++j) {
      jz.push_back(dz[j].eval_double(at));
      jw.push_back(dw[j].eval_double(at));
      images[i][j] = F.numerators()[j].eval_double(at);
    }
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        best_minor = std::max(best_minor, std::abs(jz[a] * jw[b] - jz[b] * jw[a]));
    rep.min_jacobian_minor = std::min(rep.min_jacobian_minor, best_minor);
    if (best_minor < 1e-9) {
      rep.full_rank_everywhere = false;
      rep.witnesses.push_back(pts[i]);
    }
    double q = -1.0;
    for (int j = 0; j < 6; ++j) q += sig.weight(j) * std::norm(images[i][j]);
    rep.max_onsphere_residual = std::max(rep.max_onsphere_residual, std::abs(q));
  }

  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double dimg = 0.0;
      for (int k = 0; k < 6; ++k) dimg += std::norm(images[i][k] - images[j][k]);
      dimg = std::sqrt(dimg);
      double dpt = std::sqrt(std::norm(pts[i].z - pts[j].z) + std::norm(pts[i].w - pts[j].w));
      if (dimg < 1e-12 && dpt > 1e-9) {
        ++rep.collisions;
        rep.witnesses.push_back(pts[i]);
        rep.witnesses.push_back(pts[j]);
      }
      if (dpt > 1e-9) rep.min_image_separation = std::min(rep.min_image_separation, dimg);
    }

  rep.pass = rep.full_rank_everywhere && rep.collisions == 0;
  return rep;
}

}  // namespace segrekit
