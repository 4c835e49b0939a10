#include <doctest.h>

#include "segrekit/embedding.hpp"

using namespace segrekit;

namespace {
const HypersurfaceParams kParams = HypersurfaceParams::canonical();
}

TEST_CASE("canonical coefficients and the image of (0, 1)") {
  RationalMap F = remark_212_map(kParams);
  REQUIRE(F.target_dim() == 6);
  CHECK(F.degree() == 7);
  CHECK(F.denominator() == Poly::constant(1));

  Poly z = Poly::variable(Var::Z);
  CHECK(F.numerators()[0] == ComplexRational(Rat(1, 10)) * z.pow(4));
  CHECK(F.numerators()[1] == ComplexRational(Rat(3, 40)) * (z.pow(7) + z));
  CHECK(F.numerators()[2] == Poly::variable(Var::W));
  CHECK(F.numerators()[3] == z.pow(5));
  CHECK(F.numerators()[4] == ComplexRational(Rat(1, 2)) * z);
  CHECK(F.numerators()[5] == ComplexRational(Rat(3, 40)) * (z.pow(7) - z));

  // F(0,1) = (0,0,1,0,0,0) lies on the signature-(5,1) hyperquadric
  std::vector<ComplexRational> img = F.eval({ComplexRational(0), ComplexRational(1)});
  Rat q(0);
  for (int j = 0; j < 6; ++j) {
    Rat n = img[j].norm2();
    q += (j < 5) ? n : Rat(-n);
    CHECK(img[j] == (j == 2 ? ComplexRational(1) : ComplexRational(0)));
  }
  CHECK(q == 1);
}

TEST_CASE("irrational square roots are reported by name") {
  CHECK_THROWS_WITH_AS(remark_212_map({Rat(1, 3), Rat(9, 4), Rat(1, 4)}),
                       "remark_212_map: eps0 is not a rational square; use the symbolic check",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(remark_212_map({Rat(1, 100), Rat(9, 4), Rat(1, 3)}),
                       "remark_212_map: eps is not a rational square; use the symbolic check",
                       std::invalid_argument);
}

TEST_CASE("the defining identity holds exactly for canonical parameters") {
  IdentityReport rep = verify_identity(kParams);
  CHECK(rep.pass);
  CHECK(rep.difference.is_zero());
}

TEST_CASE("the quarter-difference identity") { CHECK(verify_quarter_identity()); }

TEST_CASE("a perturbed coefficient breaks the identity") {
  // replace sqrt(eps0 c)/2 = 3/40 by 1/13 and recompute the difference
  Poly z = Poly::variable(Var::Z), w = Poly::variable(Var::W);
  std::vector<Poly> comps = {
      ComplexRational(Rat(1, 10)) * z.pow(4),
      ComplexRational(Rat(1, 13)) * (z.pow(7) + z),
      w,
      z.pow(5),
      ComplexRational(Rat(1, 2)) * z,
      ComplexRational(Rat(1, 13)) * (z.pow(7) - z),
  };
  Poly sum;
  for (int j = 0; j < 6; ++j) {
    Poly sq = HermPoly::squared_modulus(comps[j]).complexify();
    sum += (j < 5) ? sq : -sq;
  }
  Poly diff = sum - Poly::constant(1) - make_family(kParams).rho.complexify();
  CHECK_FALSE(diff.is_zero());
}

TEST_CASE("the identity holds symbolically for irrational-root parameters") {
  CHECK(verify_identity_symbolic(Rat(1, 100), Rat(9, 4), Rat(1, 4)));
  CHECK(verify_identity_symbolic(Rat(1, 3), Rat(11, 5), Rat(1, 2)));
  CHECK(verify_identity_symbolic(Rat(1, 7), Rat(9, 4), Rat(0)));
  CHECK_THROWS_AS(verify_identity_symbolic(Rat(1, 7), Rat(2), Rat(0)), std::invalid_argument);
}

TEST_CASE("immersion and injectivity at sample resolution") {
  ImmersionReport rep = immersion_check(kParams, 400, 51);
  CHECK(rep.pass);
  CHECK(rep.full_rank_everywhere);
  CHECK(rep.collisions == 0);
  CHECK(rep.min_jacobian_minor > 0.1);
  CHECK(rep.max_onsphere_residual < 1e-12);

  // eps = 0 needs rational square roots too (sqrt(0) = 0); rank survives via
  // the polynomial rows once z leaves the degenerate circle
  ImmersionReport rep0 = immersion_check({Rat(1, 100), Rat(9, 4), Rat(0)}, 400, 53);
  CHECK(rep0.full_rank_everywhere);
  CHECK(rep0.collisions == 0);
}
