#include "segrekit/mapdeg.hpp"

#include <algorithm>

#include "segrekit/numeric_roots.hpp"
#include "segrekit/prng.hpp"
#include "segrekit/segre.hpp"

namespace segrekit {

CRField cr_field(const HypersurfaceParams& params) {
  Hypersurface h = make_family(params);
  return {params, h.rho.complexify().derivative(Var::Z)};
}

Poly apply_L(const CRField& field, const Poly& g, int order) {
  if (order < 1) throw std::invalid_argument("apply_L: order must be >= 1");
  Poly cur = g;
  Poly wbar = Poly::variable(Var::WB);
  for (int i = 0; i < order; ++i)
    cur = field.a_coeff * cur.derivative(Var::W) - wbar * cur.derivative(Var::Z);
  return cur;
}

long degree_bound(int N) {
  if (N <= 0) throw std::invalid_argument("degree_bound: N must be positive");
  return 7L * N * (N + 1) / 2;
}

// ---- resultants ----

Poly resultant(const Poly& a, const Poly& b, Var elim, Var kept) {
  int da = a.degree_in(elim), db = b.degree_in(elim);
  if (da < 1 || db < 1)
    throw std::invalid_argument("resultant: both inputs must depend on the eliminated variable");
  const std::size_t n = std::size_t(da + db);
  PolyMatrix syl(n, n, kept);
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k)
      syl.at(r, r + k) = a.coeff_of(elim, uint32_t(da - k));
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k)
      syl.at(db + r, r + k) = b.coeff_of(elim, uint32_t(db - k));
  return syl.det();
}

// ---- base locus ----

namespace {

std::vector<std::complex<double>> roots_of(const Poly& p, Var v) {
  std::vector<std::complex<double>> coeffs;
  for (const ComplexRational& c : p.univariate_coeffs(v)) coeffs.push_back(c.to_complex());
  return poly_roots(coeffs);
}

// Polynomials in `kept` alone that vanish on every common zero: components
// free of the eliminated variable, plus pairwise resultants.  Returns their
// gcd; empty when no nonzero consequence exists (non-finite locus).
std::optional<Poly> coordinate_consequence(const std::vector<Poly>& comps, Var elim, Var kept) {
  std::vector<Poly> collected;
  for (const Poly& f : comps)
    if (f.degree_in(elim) == 0 && f.degree_in(kept) >= 1) collected.push_back(f);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].degree_in(elim) < 1) continue;
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      if (comps[j].degree_in(elim) < 1) continue;
      Poly res = resultant(comps[i], comps[j], elim, kept);
      if (!res.is_zero()) collected.push_back(res);
    }
  }
  if (collected.empty()) return std::nullopt;
  Poly g = collected.front();
  for (std::size_t i = 1; i < collected.size() && g.degree_in(kept) > 0; ++i)
    g = gcd_univariate(g, collected[i], kept);
  return g;
}

struct Candidates {
  std::vector<ComplexRational> exact;
  std::vector<std::complex<double>> numeric;
};

Candidates split_roots(const Poly& g, Var v) {
  Candidates out;
  for (std::complex<double> r : roots_of(g, v)) {
    ComplexRational snapped = crat_rationalize(r, 1'000'000UL);
    std::array<ComplexRational, kNumVars> at{};
    at[int(v)] = snapped;
    if (g.eval(at).is_zero()) {
      bool dup = false;
      for (const auto& e : out.exact) dup = dup || e == snapped;
      if (!dup) out.exact.push_back(snapped);
    } else {
      out.numeric.push_back(r);
    }
  }
  return out;
}

double eval_abs(const Poly& p, const DPoint2& q) {
  return std::abs(p.eval_double({q.z, q.w, 0.0, 0.0}));
}

}  // namespace

BaseLocus base_locus(const RationalMap& F) {
  std::vector<Poly> comps = F.numerators();
  comps.push_back(F.denominator());

  BaseLocus A;
  for (const Poly& f : comps)
    if (f.is_constant() && !f.is_zero()) return A;  // a nonzero constant never vanishes

  std::optional<Poly> gz = coordinate_consequence(comps, Var::W, Var::Z);
  std::optional<Poly> gw = coordinate_consequence(comps, Var::Z, Var::W);
  if (!gz || !gw) {
    A.non_finite = true;
    A.all_exact = false;
    return A;
  }
  if (gz->degree_in(Var::Z) == 0 || gw->degree_in(Var::W) == 0) return A;

  Candidates cz = split_roots(*gz, Var::Z);
  Candidates cw = split_roots(*gw, Var::W);

  auto verify_exact = [&](const Point2& p) {
    for (const Poly& f : comps)
      if (!f.eval({p.z, p.w, ComplexRational(0), ComplexRational(0)}).is_zero()) return false;
    return true;
  };

  for (const auto& z0 : cz.exact)
    for (const auto& w0 : cw.exact) {
      Point2 p{z0, w0};
      if (verify_exact(p)) A.points.push_back(p);
    }

  std::vector<std::complex<double>> all_z = cz.numeric, all_w = cw.numeric;
  for (const auto& z0 : cz.exact) all_z.push_back(z0.to_complex());
  for (const auto& w0 : cw.exact) all_w.push_back(w0.to_complex());
  for (const auto& z0 : all_z)
    for (const auto& w0 : all_w) {
      bool covered = false;
      for (const Point2& p : A.points)
        covered = covered || (std::abs(p.z.to_complex() - z0) < 1e-9 &&
                              std::abs(p.w.to_complex() - w0) < 1e-9);
      if (covered) continue;
      DPoint2 p{z0, w0};
      double res = 0.0;
      for (const Poly& f : comps) res = std::max(res, eval_abs(f, p));
      if (res <= 1e-7) {
        A.numeric.push_back({p, res});
        A.all_exact = false;
      }
    }
  return A;
}

// ---- generic degree check ----

namespace {

bool segre_passes_through(const Poly& rho_c, const Point2& p, const Point2& a) {
  // a in Q_p  <=>  rho_c(a, conj(p)) = 0, decided exactly
  return rho_c.eval({a.z, a.w, p.z.conj(), p.w.conj()}).is_zero();
}

}  // namespace

DegreeCheckReport generic_degree_check(const RationalMap& F, const HypersurfaceParams& params,
                                       int n_samples, uint64_t seed) {
  DegreeCheckReport rep;
  rep.deg_map = F.degree();
  rep.n_samples = n_samples;
  rep.seed = seed;

  BaseLocus A = base_locus(F);
  rep.base_locus_finite = !A.non_finite;
  if (A.non_finite)
    throw std::invalid_argument("generic_degree_check: base locus is not finite");

  Hypersurface h = make_family(params);
  const Poly rho_c = h.rho.complexify();
  std::vector<DPoint2> pool = sample_surface(h, std::max(16 * n_samples, 256), seed);

  rep.inequality_ok = true;
  int found = 0;
  std::size_t cursor = 16;  // skip the degenerate z = 0 slice
  int regrow = 0;
  while (found < n_samples) {
    if (cursor >= pool.size()) {
      if (++regrow > 4)
        throw std::runtime_error(
            "generic_degree_check: could not find base-locus-avoiding samples "
            "(base locus size " +
            std::to_string(A.points.size()) + ")");
      pool = sample_surface(h, int(pool.size()) * 2, seed + regrow);
      cursor = 16;
    }
    DPoint2 pd = pool[cursor++];
    if (std::abs(pd.z) < 0.05 || std::abs(pd.w) < 0.05) continue;
    // small denominators keep the exact restriction arithmetic fast; the
    // off-surface residual is recorded in the report
    Point2 p = rationalize_point(pd, 1UL << 12);
    bool hits = false;
    for (const Point2& a : A.points) hits = hits || segre_passes_through(rho_c, p, a);
    if (hits) continue;

    RestrictedMap r = restrict_to_segre(F, params, p);
    rep.restricted_degrees.push_back(r.degree);
    if (r.degree < rep.deg_map) rep.inequality_ok = false;
    rep.max_sample_rho_residual =
        std::max(rep.max_sample_rho_residual, std::abs(rat_to_double(h.rho.eval_real(p.z, p.w))));
    ++found;
  }

  rep.degrees_stable = !rep.restricted_degrees.empty();
  for (int d : rep.restricted_degrees)
    rep.degrees_stable = rep.degrees_stable && d == rep.restricted_degrees.front();
  rep.stable_degree = rep.degrees_stable ? rep.restricted_degrees.front() : -1;

  // a restriction whose Segre variety passes through a base point: the
  // degree may drop there; recorded, never asserted
  for (const Point2& a : A.points) {
    if (a.w.is_zero()) continue;
    for (int attempt = 1; attempt <= 8 && !rep.degree_through_base_point; ++attempt) {
      ComplexRational t(Rat(attempt, 3), Rat(attempt, 5));
      Point2 p = reflection(params, t, a);  // p in Q_a, hence a in Q_p
      if (!p.w.is_zero() && !F.denominator_at(p).is_zero())
        rep.degree_through_base_point = restrict_to_segre(F, params, p).degree;
    }
    if (rep.degree_through_base_point) break;
  }
  if (!A.points.empty() && !rep.degree_through_base_point)
    rep.notes.push_back("no usable Segre variety through the base locus was found");
  return rep;
}

// ---- exact dense linear algebra over Q(i) (completion vectors) ----

namespace {

struct CRatMatrix {
  std::size_t m = 0, n = 0;
  std::vector<ComplexRational> a;
  ComplexRational& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const ComplexRational& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

std::size_t row_reduce(CRatMatrix& M, std::vector<std::size_t>* pivot_cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < M.n && rank < M.m; ++col) {
    std::size_t piv = M.m;
    for (std::size_t i = rank; i < M.m; ++i)
      if (!M.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv == M.m) continue;
    for (std::size_t j = 0; j < M.n; ++j) std::swap(M.at(piv, j), M.at(rank, j));
    ComplexRational inv = ComplexRational(1) / M.at(rank, col);
    for (std::size_t j = col; j < M.n; ++j) M.at(rank, j) *= inv;
    for (std::size_t i = 0; i < M.m; ++i) {
      if (i == rank || M.at(i, col).is_zero()) continue;
      ComplexRational f = M.at(i, col);
      for (std::size_t j = col; j < M.n; ++j) M.at(i, j) -= f * M.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<ComplexRational>> nullspace(CRatMatrix M) {
  std::vector<std::size_t> pivots;
  std::size_t rank = row_reduce(M, &pivots);
  std::vector<std::vector<ComplexRational>> basis;
  std::vector<bool> is_pivot(M.n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t free_col = 0; free_col < M.n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<ComplexRational> v(M.n, ComplexRational(0));
    v[free_col] = ComplexRational(1);
    for (std::size_t r = 0; r < rank; ++r)
      v[pivots[r]] = ComplexRational(0) - M.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

Poly eval_zw(const Poly& p, const Point2& p0) {
  return p.substitute(Var::Z, Poly(p0.z)).substitute(Var::W, Poly(p0.w));
}

void strip_row_content(std::vector<Poly>& row) {
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Poly& p : row)
    for (const auto& [m, c] : p.terms())
      for (const Rat* r : {&c.re(), &c.im()}) {
        if (*r == 0) continue;
        mpz_class n = abs(r->get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r->get_den().get_mpz_t());
      }
  if (num_gcd == 0) return;
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  ComplexRational s{scale};
  for (Poly& p : row) p = s * p;
}

// Incremental row echelon over Q(i)(xibar): try_add reduces a candidate
// against the absorbed rows (division-free, content-stripped) and absorbs
// it iff it is independent.
class PolyEchelon {
 public:
  bool try_add(std::vector<Poly> row) {
    strip_row_content(row);
    for (const ERow& e : rows_) {
      if (row[e.pivot].is_zero()) continue;
      const Poly f = row[e.pivot];
      for (std::size_t j = 0; j < row.size(); ++j)
        row[j] = row[j] * e.r[e.pivot] - f * e.r[j];
      row[e.pivot] = Poly();
      strip_row_content(row);
    }
    std::size_t piv = row.size();
    int piv_deg = -1;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      int d = row[j].degree_in(Var::ZB);
      if (piv == row.size() || d < piv_deg) {
        piv = j;
        piv_deg = d;
      }
    }
    if (piv == row.size()) return false;
    rows_.push_back({piv, std::move(row)});
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct ERow {
    std::size_t pivot;
    std::vector<Poly> r;
  };
  std::vector<ERow> rows_;
};

// Scales a row (and its right-hand side) so all coefficients become content-
// free Gaussian integers; keeps the fraction-free elimination small.
void normalize_row(std::vector<Poly>& row, Poly* rhs) {
  mpz_class num_gcd = 0, den_lcm = 1;
  auto fold = [&](const Poly& p) {
    for (const auto& [m, c] : p.terms())
      for (const Rat* r : {&c.re(), &c.im()}) {
        if (*r == 0) continue;
        mpz_class n = abs(r->get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r->get_den().get_mpz_t());
      }
  };
  for (const Poly& p : row) fold(p);
  if (rhs) fold(*rhs);
  if (num_gcd == 0) return;
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  ComplexRational s{scale};
  for (Poly& p : row) p = s * p;
  if (rhs) *rhs = s * *rhs;
}

// Fraction-free forward elimination on [A | b], then back-substitution over
// the rational function field.  Requires full rank; throws otherwise.
// *last_pivot receives the final Bareiss pivot (the determinant up to sign).
std::vector<RationalFunction> solve_linear(std::vector<std::vector<Poly>> A, std::vector<Poly> b,
                                           int n, Poly* last_pivot) {
  const Poly one = Poly::constant(1);
  Poly prev = one;
  for (int k = 0; k < n; ++k) {
    int piv = -1, piv_deg = -1;
    for (int i = k; i < n; ++i) {
      if (A[i][k].is_zero()) continue;
      int d = A[i][k].degree_in(Var::ZB);
      if (piv < 0 || d < piv_deg) {
        piv = i;
        piv_deg = d;
      }
    }
    if (piv < 0) throw std::runtime_error("cramer_reconstruct: degenerate configuration; perturb p0");
    if (piv != k) {
      std::swap(A[piv], A[k]);
      std::swap(b[piv], b[k]);
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Poly t = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        A[i][j] = (prev == one) ? t : divide_exact(t, prev, Var::ZB);
      }
      Poly t = b[i] * A[k][k] - A[i][k] * b[k];
      b[i] = (prev == one) ? t : divide_exact(t, prev, Var::ZB);
      A[i][k] = Poly();
    }
    prev = A[k][k];
  }
  if (last_pivot) *last_pivot = prev;

  std::vector<RationalFunction> x(n);
  for (int k = n - 1; k >= 0; --k) {
    RationalFunction s(b[k], one, Var::ZB);
    for (int j = k + 1; j < n; ++j)
      s = s - RationalFunction(A[k][j], one, Var::ZB) * x[j];
    x[k] = s / RationalFunction(A[k][k], one, Var::ZB);
  }
  return x;
}

}  // namespace

// ---- Cramer reconstruction ----

Reconstruction cramer_reconstruct(const RationalMap& F, const HypersurfaceParams& params,
                                  const Point2& p0, const Signature& sig, uint64_t seed) {
  const int N = F.target_dim();
  if (sig.dim() != N)
    throw std::invalid_argument("cramer_reconstruct: signature does not match the target dimension");
  if (p0.w.is_zero()) throw std::domain_error("cramer_reconstruct: w_{p0} = 0");
  ComplexRational Rp0 = F.denominator_at(p0);
  if (Rp0.is_zero()) throw std::domain_error("cramer_reconstruct: F has a pole at p0");

  Hypersurface h = make_family(params);
  const Poly rho_c = h.rho.complexify();
  const Poly phi = segre_graph(params, p0);
  const Poly psi = phi.conjugate();  // univariate in xibar = Var::ZB
  const CRField field = cr_field(params);

  Reconstruction out;
  out.bound = degree_bound(N);
  out.rho_residual_at_p0 = rat_to_string(h.rho.eval_real(p0.z, p0.w));

  // Pairing mode: does the signature identity
  //   sum_j e_j F_j(Z) conj(F_j)(W) = 1   hold on {rho_c = 0}?
  // Divisibility by rho_c decides membership (principal ideal).
  Poly pairing;
  for (int j = 0; j < N; ++j) {
    Poly t = F.numerators()[j] * F.numerators()[j].conjugate();
    pairing += sig.weight(j) > 0 ? t : -t;
  }
  pairing -= F.denominator() * F.denominator().conjugate();
  const bool mode_hq = reduce_by(pairing, rho_c).second.is_zero();
  out.pairing = mode_hq ? "hyperquadric" : "tautological";

  // Jets: V_alpha[j] = (L^alpha F_j)(p0), polynomials in xibar once
  // etabar := psi.  F_j = P_j / R, and L(g/R^m) = (L(g) R - m g L(R)) / R^{m+1}.
  const Poly R = F.denominator();
  const Poly LR = apply_L(field, R);
  const int alpha_cap = std::max(2 * N + 2, 10);
  std::vector<Poly> jet_num = F.numerators();
  ComplexRational rinv = ComplexRational(1) / Rp0;
  ComplexRational denom_scale = rinv;

  std::vector<std::vector<Poly>> vrows;  // vrows[alpha-1][j], signature-weighted
  for (int alpha = 1; alpha <= alpha_cap; ++alpha) {
    denom_scale *= rinv;
    std::vector<Poly> row(N);
    for (int j = 0; j < N; ++j) {
      Poly& g = jet_num[j];
      g = apply_L(field, g) * R - ComplexRational(long(alpha)) * g * LR;
      Poly entry = denom_scale * eval_zw(g, p0).substitute(Var::WB, psi);
      row[j] = (mode_hq && sig.weight(j) < 0) ? -entry : entry;
    }
    normalize_row(row, nullptr);
    vrows.push_back(std::move(row));
  }

  // Greedy first-independent order set over Q(i)(xibar): defines rank k.
  std::vector<int> selected;
  {
    PolyEchelon ech;
    int no_gain = 0;
    for (int alpha = 1; alpha <= alpha_cap && no_gain < N; ++alpha) {
      if (ech.try_add(vrows[alpha - 1])) {
        selected.push_back(alpha);
        no_gain = 0;
      } else {
        ++no_gain;
      }
    }
  }
  const int k = int(selected.size());
  out.rank_k = k;
  out.first_k_orders_suffice = true;
  for (int i = 0; i < k; ++i)
    out.first_k_orders_suffice = out.first_k_orders_suffice && selected[i] == i + 1;
  out.orders_used = selected;

  // The known restriction; its conjugate is the unknown vector of the solve.
  RestrictedMap restr = restrict_to_segre(F, params, p0);
  const Poly D = restr.denominator.conjugate();  // common denominator in xibar
  std::vector<Poly> xnum(N);
  for (int j = 0; j < N; ++j) xnum[j] = restr.numerators[j].conjugate();
  std::vector<ComplexRational> fj0 = F.eval(p0);
  std::vector<ComplexRational> x0(N);
  for (int j = 0; j < N; ++j) x0[j] = fj0[j].conj();

  // Displacement span: coefficients of conj(num_j) - x0_j * D by xibar-power.
  std::vector<Poly> disp(N);
  int max_deg = 0;
  for (int j = 0; j < N; ++j) {
    disp[j] = xnum[j] - x0[j] * D;
    max_deg = std::max(max_deg, disp[j].degree_in(Var::ZB));
  }
  CRatMatrix disp_m;
  disp_m.m = std::size_t(max_deg + 1);
  disp_m.n = std::size_t(N);
  disp_m.a.assign(disp_m.m * disp_m.n, ComplexRational(0));
  for (int j = 0; j < N; ++j)
    for (int d = 0; d <= max_deg; ++d)
      disp_m.at(d, j) = disp[j].coeff(mono_var(Var::ZB, uint32_t(d)));
  {
    CRatMatrix copy = disp_m;
    out.taylor_span_dim = int(row_reduce(copy, nullptr));
  }

  // Ordered candidate equations: the order-zero row first, then the
  // independent V_alpha rows.
  std::vector<std::vector<Poly>> cand_rows;
  std::vector<Poly> cand_rhs;
  Poly rhs_den = Poly::constant(1);
  {
    std::vector<Poly> row0(N);
    if (mode_hq) {
      for (int j = 0; j < N; ++j) {
        ComplexRational c = fj0[j];
        row0[j] = Poly(sig.weight(j) < 0 ? ComplexRational(0) - c : c);
      }
      cand_rows.push_back(row0);
      cand_rhs.push_back(Poly::constant(1));
      for (int alpha : selected) {
        cand_rows.push_back(vrows[alpha - 1]);
        cand_rhs.push_back(Poly());
      }
    } else {
      // no target identity: right-hand sides are the pairings with the known
      // restriction, over the common denominator D
      rhs_den = D;
      auto dot_xtrue = [&](const std::vector<Poly>& row) {
        Poly s;
        for (int j = 0; j < N; ++j) s += row[j] * xnum[j];
        return s;
      };
      for (int j = 0; j < N; ++j) row0[j] = Poly(fj0[j]);
      cand_rows.push_back(row0);
      cand_rhs.push_back(dot_xtrue(row0));
      for (int alpha : selected) {
        cand_rows.push_back(vrows[alpha - 1]);
        cand_rhs.push_back(dot_xtrue(vrows[alpha - 1]));
      }
    }
  }

  // Greedy independent subset, in order, capped at N equations.
  std::vector<std::vector<Poly>> rows;
  std::vector<Poly> rhs;
  PolyEchelon sys_ech;
  for (std::size_t i = 0; i < cand_rows.size() && rows.size() < std::size_t(N); ++i) {
    if (sys_ech.try_add(cand_rows[i])) {
      rows.push_back(cand_rows[i]);
      rhs.push_back(cand_rhs[i]);
    }
  }

  // Low-rank branch: complete with constant vectors annihilating the
  // displacement (Cauchy data), seeded random and verified exactly.
  int needed = N - int(rows.size());
  out.n_completion_vectors = std::max(needed, 0);
  if (needed > 0) {
    auto null_basis = nullspace(disp_m);
    if (int(null_basis.size()) < needed)
      throw std::runtime_error("cramer_reconstruct: degenerate configuration; perturb p0");
    Rng rng = Rng(seed).derive("completion-vectors");
    for (int attempt = 0; needed > 0; ++attempt) {
      if (attempt >= 64)
        throw std::runtime_error("cramer_reconstruct: degenerate configuration; perturb p0");
      std::vector<ComplexRational> v(N, ComplexRational(0));
      for (const auto& b : null_basis) {
        ComplexRational coef = rng.next_crat(8, 4);
        for (int j = 0; j < N; ++j) v[j] += coef * b[j];
      }
      Poly check;
      for (int j = 0; j < N; ++j) check += v[j] * disp[j];
      if (!check.is_zero())
        throw std::logic_error("cramer_reconstruct: completion vector fails annihilation");
      std::vector<Poly> row(N);
      ComplexRational vdotx0(0);
      for (int j = 0; j < N; ++j) {
        row[j] = Poly(v[j]);
        vdotx0 += v[j] * x0[j];
      }
      if (sys_ech.try_add(row)) {
        rows.push_back(std::move(row));
        rhs.push_back(Poly(vdotx0) * rhs_den);
        --needed;
      }
    }
  }
  if (rows.size() < std::size_t(N))
    throw std::runtime_error("cramer_reconstruct: degenerate configuration; perturb p0");

  // Cramer solve: one fraction-free elimination, then back-substitution.
  for (int i = 0; i < N; ++i) normalize_row(rows[i], &rhs[i]);
  Poly det_pivot;
  std::vector<RationalFunction> sol = solve_linear(rows, rhs, N, &det_pivot);
  out.matrix_degree = det_pivot.degree_in(Var::ZB);

  RationalFunction den_rf(rhs_den, Poly::constant(1), Var::ZB);
  bool matches = true;
  for (int j = 0; j < N; ++j) {
    RationalFunction comp = (sol[j] / den_rf).conjugated();
    matches = matches && comp == restr.component(j);
    out.components.push_back(std::move(comp));
  }
  out.matches_restriction = matches;

  // degree in the canonical common-denominator form
  Poly common = Poly::constant(1);
  for (const auto& c : out.components) common = lcm_univariate(common, c.den(), Var::Z);
  int deg = common.degree_in(Var::Z);
  for (const auto& c : out.components) {
    Poly scaled = c.num() * divide_exact(common, c.den(), Var::Z);
    deg = std::max(deg, scaled.degree_in(Var::Z));
  }
  out.degree = deg;
  out.within_bound = deg <= out.bound;
  return out;
}

}  // namespace segrekit
