#include "segrekit/rational_map.hpp"

#include "segrekit/poly_json.hpp"
#include "segrekit/prng.hpp"
#include "segrekit/segre.hpp"

namespace segrekit {

namespace {

void check_holomorphic(const Poly& p, const char* what) {
  if (p.depends_on(Var::ZB) || p.depends_on(Var::WB))
    throw std::invalid_argument(std::string(what) + ": components must be polynomials in (z, w)");
}

// Restriction of p to the affine line (z, w) = (a + b t, c + d t); the line
// parameter borrows the zbar slot, which is unused by map components.
Poly on_line(const Poly& p, const ComplexRational& a, const ComplexRational& b,
             const ComplexRational& c, const ComplexRational& d) {
  Poly t = Poly::variable(Var::ZB);
  Poly zline = Poly(a) + Poly(b) * t;
  Poly wline = Poly(c) + Poly(d) * t;
  return p.substitute(Var::Z, zline).substitute(Var::W, wline);
}

}  // namespace

RationalMap RationalMap::make(std::vector<Poly> numerators, Poly denominator, uint64_t seed) {
  if (numerators.empty()) throw std::invalid_argument("RationalMap: no components");
  if (denominator.is_zero()) throw std::invalid_argument("RationalMap: zero denominator");
  for (const Poly& p : numerators) check_holomorphic(p, "RationalMap");
  check_holomorphic(denominator, "RationalMap");

  RationalMap f;
  f.numerators_ = std::move(numerators);
  f.denominator_ = std::move(denominator);

  NormalizationCertificate cert;
  cert.seed = seed;
  cert.lines_total = 32;
  Rng rng = Rng(seed).derive("normalization-probe");
  for (int line = 0; line < cert.lines_total; ++line) {
    ComplexRational a = rng.next_crat(64, 16), b = rng.next_crat(64, 16);
    ComplexRational c = rng.next_crat(64, 16), d = rng.next_crat(64, 16);
    if (b.is_zero() && d.is_zero()) b = ComplexRational(1);

    bool flagged = true;
    Poly g;
    bool have = false;
    auto fold = [&](const Poly& comp) {
      if (!flagged) return;
      Poly r = on_line(comp, a, b, c, d);
      if (r.is_zero()) return;  // gcd(g, 0) = g
      if (!have) {
        g = r;
        have = true;
      } else {
        g = gcd_univariate(g, r, Var::ZB);
      }
      if (have && g.degree_in(Var::ZB) == 0) flagged = false;
    };
    for (const Poly& p : f.numerators_) fold(p);
    fold(f.denominator_);
    if (flagged) ++cert.lines_flagged;
  }
  if (cert.lines_flagged >= 2)
    throw std::invalid_argument("RationalMap: not normalized (common factor detected on " +
                                std::to_string(cert.lines_flagged) + " probe lines)");
  cert.inconclusive = cert.lines_flagged == 1;
  f.cert_ = cert;
  return f;
}

int RationalMap::degree() const {
  int d = denominator_.degree({Var::Z, Var::W});
  for (const Poly& p : numerators_) d = std::max(d, p.degree({Var::Z, Var::W}));
  return d;
}

ComplexRational RationalMap::denominator_at(const Point2& p) const {
  return denominator_.eval({p.z, p.w, ComplexRational(0), ComplexRational(0)});
}

std::vector<ComplexRational> RationalMap::eval(const Point2& p) const {
  ComplexRational den = denominator_at(p);
  if (den.is_zero()) throw std::domain_error("RationalMap: evaluation at a pole");
  std::vector<ComplexRational> vals;
  vals.reserve(numerators_.size());
  for (const Poly& q : numerators_)
    vals.push_back(q.eval({p.z, p.w, ComplexRational(0), ComplexRational(0)}) / den);
  return vals;
}

nlohmann::json RationalMap::to_json() const {
  nlohmann::json nums = nlohmann::json::array();
  for (const Poly& p : numerators_) nums.push_back(poly_to_json(p));
  return {{"N", target_dim()},
          {"numerators", nums},
          {"denominator", poly_to_json(denominator_)}};
}

RationalMap RationalMap::from_json(const nlohmann::json& j, uint64_t seed) {
  std::vector<Poly> nums;
  for (const auto& pj : j.at("numerators")) nums.push_back(poly_from_json(pj));
  if (j.contains("N") && j.at("N").get<int>() != static_cast<int>(nums.size()))
    throw std::invalid_argument("map file: N does not match the numerator count");
  return make(std::move(nums), poly_from_json(j.at("denominator")), seed);
}

RestrictedMap restrict_to_segre(const RationalMap& F, const HypersurfaceParams& params,
                                const Point2& p) {
  Poly phi = segre_graph(params, p);  // univariate in xi = Var::Z

  RestrictedMap r;
  for (const Poly& q : F.numerators()) r.numerators.push_back(q.substitute(Var::W, phi));
  r.denominator = F.denominator().substitute(Var::W, phi);
  if (r.denominator.is_zero())
    throw std::domain_error("restrict_to_segre: Q_p inside pole set");

  // cancel the common univariate factor exactly
  Poly g = r.denominator;
  for (const Poly& q : r.numerators)
    if (!q.is_zero()) g = gcd_univariate(g, q, Var::Z);
  r.cancelled_degree = std::max(g.degree_in(Var::Z), 0);
  if (r.cancelled_degree > 0) {
    for (Poly& q : r.numerators)
      if (!q.is_zero()) q = divide_exact(q, g, Var::Z);
    r.denominator = divide_exact(r.denominator, g, Var::Z);
  }
  ComplexRational lead = leading_coeff(r.denominator, Var::Z);
  ComplexRational inv = ComplexRational(1) / lead;
  for (Poly& q : r.numerators) q = inv * q;
  r.denominator = inv * r.denominator;

  r.degree = r.denominator.degree_in(Var::Z);
  for (const Poly& q : r.numerators) r.degree = std::max(r.degree, q.degree_in(Var::Z));
  return r;
}

}  // namespace segrekit
