#include <doctest.h>

#include "segrekit/embedding.hpp"
#include "segrekit/mapdeg.hpp"
#include "segrekit/segre.hpp"

using namespace segrekit;

namespace {

const HypersurfaceParams kParams = HypersurfaceParams::canonical();

Poly zpow(int k) { return Poly::variable(Var::Z).pow(uint32_t(k)); }

RationalMap identity_map() {
  return RationalMap::make({Poly::variable(Var::Z), Poly::variable(Var::W)}, Poly::constant(1));
}

}  // namespace

TEST_CASE("map construction, degree, normalization probe") {
  CHECK(identity_map().degree() == 1);

  // gcd(z^2, z w, w) = 1: accepted with degree 2
  RationalMap f = RationalMap::make({zpow(2), Poly::variable(Var::Z) * Poly::variable(Var::W)},
                                    Poly::variable(Var::W));
  CHECK(f.degree() == 2);
  CHECK_FALSE(f.certificate().inconclusive);

  // blatant common factor z*(1+w) across all components is rejected
  Poly z = Poly::variable(Var::Z), w = Poly::variable(Var::W);
  Poly common = z * (Poly::constant(1) + w);
  CHECK_THROWS_AS(RationalMap::make({common, common * z}, common * w), std::invalid_argument);

  CHECK(remark_212_map(kParams).degree() == 7);

  // serialization round-trip
  nlohmann::json j = f.to_json();
  RationalMap g = RationalMap::from_json(j);
  CHECK(g.degree() == 2);
  CHECK(g.numerators()[0] == zpow(2));
}

TEST_CASE("restriction to a Segre variety") {
  // identity map at (0, 1): phi is constant 1, so the restriction is (xi, 1)
  RestrictedMap r = restrict_to_segre(identity_map(), kParams, {ComplexRational(0), ComplexRational(1)});
  CHECK(r.degree == 1);
  CHECK(r.numerators[0] == Poly::variable(Var::Z));
  CHECK(r.numerators[1] == Poly::constant(1));
  CHECK(r.denominator == Poly::constant(1));

  // the embedding map at (0, 1), componentwise
  RestrictedMap e = restrict_to_segre(remark_212_map(kParams), kParams,
                                      {ComplexRational(0), ComplexRational(1)});
  CHECK(e.degree == 7);
  CHECK(e.numerators[0] == ComplexRational(Rat(1, 10)) * zpow(4));
  CHECK(e.numerators[1] == ComplexRational(Rat(3, 40)) * (zpow(7) + zpow(1)));
  CHECK(e.numerators[2] == Poly::constant(1));
  CHECK(e.numerators[3] == zpow(5));
  CHECK(e.numerators[4] == ComplexRational(Rat(1, 2)) * zpow(1));
  CHECK(e.numerators[5] == ComplexRational(Rat(3, 40)) * (zpow(7) - zpow(1)));

  // generic base point: degree stays within deg(F) * 7
  Rng rng(71);
  for (int i = 0; i < 10; ++i) {
    Point2 p{rng.next_crat(6, 5), rng.next_crat(6, 5)};
    if (p.w.is_zero()) continue;
    RestrictedMap rr = restrict_to_segre(remark_212_map(kParams), kParams, p);
    CHECK(rr.degree <= 49);
    CHECK(rr.degree <= 7 * remark_212_map(kParams).degree());
    RestrictedMap ri = restrict_to_segre(identity_map(), kParams, p);
    CHECK(ri.degree <= 7);
  }

  // a denominator vanishing identically on Q_p is a pole-set error
  Point2 p{ComplexRational(Rat(1, 2)), ComplexRational(1)};
  Poly phi = segre_graph(kParams, p);
  RationalMap pole = RationalMap::make({Poly::variable(Var::Z)}, Poly::variable(Var::W) - phi);
  CHECK_THROWS_WITH_AS(restrict_to_segre(pole, kParams, p),
                       "restrict_to_segre: Q_p inside pole set", std::domain_error);
}

TEST_CASE("tangent field: verbatim coefficient and annihilation") {
  CRField L = cr_field(kParams);

  // 4 eps0 xibar^4 z^3 + (7 c eps0 / 2) xibar z^6 + (c eps0 / 2) xibar^7
  //   + 5 xibar^5 z^4 + eps xibar
  Poly expect;
  expect.add_term(mono(3, 0, 4, 0), ComplexRational(Rat(4, 100)));
  expect.add_term(mono(6, 0, 1, 0), ComplexRational(Rat(7 * 9, 2 * 4 * 100)));
  expect.add_term(mono(0, 0, 7, 0), ComplexRational(Rat(9, 2 * 4 * 100)));
  expect.add_term(mono(4, 0, 5, 0), ComplexRational(5));
  expect.add_term(mono(0, 0, 1, 0), ComplexRational(Rat(1, 4)));
  CHECK(L.a_coeff == expect);

  // L annihilates the complexified defining polynomial, for any parameters
  Rng rng(73);
  for (int i = 0; i < 5; ++i) {
    Rat eps0(rng.next_int(1, 50), 100);
    Rat c(rng.next_int(2 * 64 + 1, 2 * 64 + 18), 64);  // inside (2, 16/7)
    Rat eps(rng.next_int(0, 63), 64);
    HypersurfaceParams q{eps0, c, eps};
    CRField Lq = cr_field(q);
    CHECK(apply_L(Lq, make_family(q).rho.complexify()).is_zero());
  }

  CHECK(apply_L(L, Poly::variable(Var::W)) == L.a_coeff);
  CHECK(apply_L(L, Poly::variable(Var::Z)) == -Poly::variable(Var::WB));

  // L^2(z^2) = 2 etabar^2 (etabar is a parameter of the field)
  Poly z2 = zpow(2);
  Poly wb = Poly::variable(Var::WB);
  CHECK(apply_L(L, z2, 2) == ComplexRational(2) * wb * wb);
  CHECK_THROWS_AS(apply_L(L, z2, 0), std::invalid_argument);
}

TEST_CASE("degree bound formula") {
  CHECK(degree_bound(1) == 7);
  CHECK(degree_bound(2) == 21);
  CHECK(degree_bound(6) == 147);
  CHECK_THROWS_AS(degree_bound(0), std::invalid_argument);
}

TEST_CASE("base locus fixtures, verified by exact back-substitution") {
  // common zeros of {z, w, 1+z} are empty
  RationalMap f1 = RationalMap::make({Poly::variable(Var::Z), Poly::variable(Var::W)},
                                     Poly::constant(1) + Poly::variable(Var::Z));
  BaseLocus a1 = base_locus(f1);
  CHECK_FALSE(a1.non_finite);
  CHECK(a1.points.empty());
  CHECK(a1.numeric.empty());

  // common zeros of {z^2, z w, w} = {(0, 0)}
  RationalMap f2 = RationalMap::make({zpow(2), Poly::variable(Var::Z) * Poly::variable(Var::W)},
                                     Poly::variable(Var::W));
  BaseLocus a2 = base_locus(f2);
  CHECK_FALSE(a2.non_finite);
  REQUIRE(a2.points.size() == 1);
  CHECK(a2.points[0].z == ComplexRational(0));
  CHECK(a2.points[0].w == ComplexRational(0));
  CHECK(a2.all_exact);

  // {z - w, z w - 1, z + w - 2} vanish only at (1, 1)
  Poly z = Poly::variable(Var::Z), w = Poly::variable(Var::W);
  RationalMap f3 = RationalMap::make({z - w, z * w - Poly::constant(1)},
                                     z + w - Poly::constant(2));
  BaseLocus a3 = base_locus(f3);
  REQUIRE(a3.points.size() == 1);
  CHECK(a3.points[0].z == ComplexRational(1));
  CHECK(a3.points[0].w == ComplexRational(1));
  CHECK(a3.all_exact);

  // a nonzero constant component can never vanish
  BaseLocus a4 = base_locus(identity_map());
  CHECK(a4.points.empty());
  CHECK_FALSE(a4.non_finite);
}

TEST_CASE("generic degree comparison across Segre restrictions") {
  // identity map: deg F = 1, the restriction picks up the full graph degree 7;
  // only the inequality deg F <= deg(F|Q) is asserted
  DegreeCheckReport r = generic_degree_check(identity_map(), kParams, 5, 101);
  CHECK(r.deg_map == 1);
  CHECK(r.degrees_stable);
  CHECK(r.stable_degree == 7);
  CHECK(r.inequality_ok);

  // projection-style map (z, 0): restriction has degree 1 = deg F
  RationalMap proj = RationalMap::make({Poly::variable(Var::Z), Poly()}, Poly::constant(1));
  DegreeCheckReport rp = generic_degree_check(proj, kParams, 5, 103);
  CHECK(rp.deg_map == 1);
  CHECK(rp.stable_degree == 1);
  CHECK(rp.inequality_ok);

  // the embedding map: stable restricted degree across samples
  DegreeCheckReport re = generic_degree_check(remark_212_map(kParams), kParams, 20, 107);
  CHECK(re.degrees_stable);
  CHECK(re.stable_degree == 7);
  CHECK(re.inequality_ok);

  // a map with a base point: the restriction through it is recorded
  Poly zz = Poly::variable(Var::Z), ww = Poly::variable(Var::W);
  RationalMap fb = RationalMap::make({zz - ww, zz * ww - Poly::constant(1)},
                                     zz + ww - Poly::constant(2));
  DegreeCheckReport rb = generic_degree_check(fb, kParams, 5, 109);
  CHECK(rb.degree_through_base_point.has_value());
}

TEST_CASE("cramer reconstruction: identity-like map at (0, 1)") {
  Point2 p0{ComplexRational(0), ComplexRational(1)};
  Reconstruction rec = cramer_reconstruct(identity_map(), kParams, p0, Signature::ball(2), 19);
  CHECK(rec.pairing == "tautological");
  CHECK(rec.matches_restriction);
  CHECK(rec.within_bound);
  CHECK(rec.components[0] == RationalFunction::from_poly(Poly::variable(Var::Z), Var::Z));
  CHECK(rec.components[1] == RationalFunction::from_poly(Poly::constant(1), Var::Z));
  CHECK(rec.degree == 1);
  CHECK(rec.bound == 21);
}

TEST_CASE("cramer reconstruction: embedding map at an exact surface point") {
  Rng rng(113);
  Point2 p0{ComplexRational(0), rng.next_rational_unit()};
  RationalMap F = remark_212_map(kParams);
  Reconstruction rec = cramer_reconstruct(F, kParams, p0, hyperquadric_signature(), 23);
  CHECK(rec.pairing == "hyperquadric");
  CHECK(rec.matches_restriction);
  CHECK(rec.within_bound);
  CHECK(rec.bound == 147);
  CHECK(rec.rank_k < 5);  // z0 = 0 is a rank-degenerate point: low-rank branch
  CHECK(rec.n_completion_vectors == 5 - rec.rank_k);
  // at an exact surface point, the displacement span equals the row span
  CHECK(rec.taylor_span_dim == rec.rank_k);
  CHECK(rec.rho_residual_at_p0 == "0/1");
}

TEST_CASE("cramer reconstruction: embedding map at a generic sampled point") {
  Hypersurface h = make_family(kParams);
  std::vector<DPoint2> pool = sample_surface(h, 40, 127);
  Point2 p0 = rationalize_point(pool[25], 1UL << 12);
  REQUIRE(std::abs(pool[25].z) > 0.05);
  RationalMap F = remark_212_map(kParams);

  Reconstruction rec = cramer_reconstruct(F, kParams, p0, hyperquadric_signature(), 29);
  CHECK(rec.pairing == "hyperquadric");
  CHECK(rec.matches_restriction);
  CHECK(rec.within_bound);
  CHECK(rec.degree == 7);
  CHECK(rec.first_k_orders_suffice);

  // error paths
  CHECK_THROWS_AS(
      cramer_reconstruct(F, kParams, Point2{ComplexRational(1), ComplexRational(0)},
                         hyperquadric_signature(), 1),
      std::domain_error);
  CHECK_THROWS_AS(cramer_reconstruct(F, kParams, p0, Signature::ball(5), 1),
                  std::invalid_argument);
}

TEST_CASE("row degrees obey the 7-alpha bound") {
  // V-row entries are polynomials in xibar of degree <= 7 alpha; the solve's
  // Cramer determinant degree therefore stays under 7 N (N+1) / 2
  Hypersurface h = make_family(kParams);
  std::vector<DPoint2> pool = sample_surface(h, 40, 131);
  Point2 p0 = rationalize_point(pool[30], 1UL << 10);
  Reconstruction rec =
      cramer_reconstruct(remark_212_map(kParams), kParams, p0, hyperquadric_signature(), 31);
  CHECK(rec.matrix_degree <= rec.bound);
}
