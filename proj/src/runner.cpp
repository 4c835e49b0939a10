#include "segrekit/runner.hpp"

#include <fstream>
#include <sstream>

#include "segrekit/bounds.hpp"
#include "segrekit/embedding.hpp"
#include "segrekit/monodromy.hpp"
#include "segrekit/poly_json.hpp"
#include "segrekit/segre.hpp"

namespace segrekit {

namespace {

Point2 parse_point(const std::string& s) {
  std::vector<Rat> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(rat_from_string(tok));
  if (parts.size() != 4)
    throw std::invalid_argument("point: expected \"z_re,z_im,w_re,w_im\" rationals");
  return {ComplexRational(parts[0], parts[1]), ComplexRational(parts[2], parts[3])};
}

nlohmann::json point_json(const DPoint2& p) {
  return {p.z.real(), p.z.imag(), p.w.real(), p.w.imag()};
}

nlohmann::json levi_witness(const Hypersurface& h, const DPoint2& p) {
  auto [gz, gw] = gradient(h, p);
  return {{"kind", "levi_point"},
          {"point", point_json(p)},
          {"grad_norm", std::sqrt(std::norm(gz) + std::norm(gw))},
          {"levi_value", levi_scalar(h, p)}};
}

Report run_verify_embedding(const RunConfig& cfg) {
  Report rep;
  rep.check_name = "verify-embedding";
  rep.seed = cfg.seed;
  rep.params_echo = cfg.params_json();

  bool symbolic = verify_identity_symbolic(cfg.params.eps0, cfg.params.c, cfg.params.eps);
  bool quarter = verify_quarter_identity();
  rep.metrics["identity_symbolic"] = symbolic;
  rep.metrics["quarter_identity"] = quarter;

  bool exact_ok = true;
  Rat root;
  bool rational_roots = rat_sqrt_exact(cfg.params.eps0, &root) &&
                        rat_sqrt_exact(Rat(cfg.params.eps0 * cfg.params.c / 4), &root) &&
                        rat_sqrt_exact(cfg.params.eps, &root);
  rep.metrics["rational_coefficients"] = rational_roots;
  if (rational_roots) {
    RationalMap F = remark_212_map(cfg.params);
    IdentityReport idr = verify_identity(cfg.params);
    exact_ok = idr.pass;
    rep.metrics["identity_exact"] = idr.pass;
    rep.metrics["degree"] = F.degree();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Poly& p : F.numerators()) {
      // leading coefficient of each component
      ComplexRational lead = leading_coeff(p, p.depends_on(Var::W) ? Var::W : Var::Z);
      coeffs.push_back(rat_to_string(lead.re()));
    }
    rep.metrics["component_leads"] = coeffs;

    ImmersionReport imm = immersion_check(cfg.params, std::min(cfg.samples, 512), cfg.seed);
    rep.metrics["immersion"] = {{"full_rank", imm.full_rank_everywhere},
                                {"collisions", imm.collisions},
                                {"min_jacobian_minor", imm.min_jacobian_minor},
                                {"max_onsphere_residual", imm.max_onsphere_residual}};
    if (!imm.pass) {
      exact_ok = false;
      for (const DPoint2& p : imm.witnesses)
        rep.witnesses.push_back({{"kind", "jacobian_rank"}, {"point", point_json(p)}});
    }
  }

  bool ok = symbolic && quarter && exact_ok;
  rep.status = ok ? Status::Pass : Status::Fail;
  if (!ok && rep.witnesses.empty())
    rep.witnesses.push_back({{"kind", "identity_difference"},
                             {"identity_symbolic", symbolic},
                             {"quarter_identity", quarter}});
  return rep;
}

Report run_levi_scan(const RunConfig& cfg) {
  Report rep;
  rep.check_name = "levi-scan";
  rep.seed = cfg.seed;
  rep.params_echo = cfg.params_json();

  Hypersurface h = make_family(cfg.params);
  ScanReport sr = scan(h, cfg.samples, cfg.seed);
  rep.metrics["n_samples"] = sr.n_samples;
  rep.metrics["min_grad_norm"] = sr.min_grad_norm;
  rep.metrics["min_levi"] = sr.min_levi;
  rep.metrics["max_rho_residual"] = sr.max_rho_residual;
  rep.metrics["argmin_grad"] = point_json(sr.argmin_grad);
  rep.metrics["argmin_levi"] = point_json(sr.argmin_levi);
  rep.metrics["note"] =
      "smoothness and pseudoconvexity are certified at sample resolution, not globally";

  if (cfg.grid > 0 && !cfg.out_path.empty()) {
    std::ofstream csv(cfg.out_path + ".csv");
    csv << "z_re,z_im,levi\n";
    for (int i = 0; i < cfg.grid; ++i)
      for (int j = 0; j < cfg.grid; ++j) {
        double x = -1.2 + 2.4 * i / (cfg.grid - 1), y = -1.2 + 2.4 * j / (cfg.grid - 1);
        std::complex<double> z(x, y);
        double eps0 = cfg.params.eps0.get_d(), c = cfg.params.c.get_d(),
               eps = cfg.params.eps.get_d();
        double r2 = std::norm(z);
        std::complex<double> z6 = z * z * z;
        z6 *= z6;
        double s = 1.0 - eps0 * (r2 * r2 * r2 * r2 + c * r2 * z6.real()) - std::pow(r2, 5) -
                   eps * r2;
        if (s < 0) continue;
        DPoint2 p{z, std::sqrt(s)};
        csv << x << "," << y << "," << levi_scalar(h, p) << "\n";
      }
    rep.metrics["csv"] = cfg.out_path + ".csv";
  }

  double levi_floor = cfg.params.eps > 0 ? 0.0 : -1e-9;
  bool ok = sr.min_grad_norm > 1e-6 && sr.min_levi > levi_floor;
  rep.status = ok ? Status::Pass : Status::Fail;
  if (!ok) rep.witnesses.push_back(levi_witness(h, sr.argmin_levi));
  return rep;
}

Report run_segre(const RunConfig& cfg) {
  Report rep;
  rep.check_name = "segre";
  rep.seed = cfg.seed;
  rep.params_echo = cfg.params_json();
  if (cfg.point.empty()) throw std::invalid_argument("segre: --point required");
  Point2 p = parse_point(cfg.point);
  if (p.w.is_zero()) throw std::domain_error("segre: graph form unavailable (w_p = 0)");

  Hypersurface h = make_family(cfg.params);
  Poly phi = segre_graph(cfg.params, p);
  nlohmann::json coeffs = nlohmann::json::array();
  for (const ComplexRational& c : phi.univariate_coeffs(Var::Z))
    coeffs.push_back({{"re", rat_to_string(c.re())}, {"im", rat_to_string(c.im())}});
  rep.metrics["phi_coeffs"] = coeffs;
  rep.metrics["phi_degree"] = phi.degree_in(Var::Z);

  // graph/implicit consistency: the implicit form vanishes identically on
  // the graph eta = phi(xi)
  Poly implicit = segre_implicit(h, p);
  bool graph_consistent = implicit.substitute(Var::W, phi).is_zero();
  rep.metrics["graph_implicit_consistent"] = graph_consistent;

  // self-membership p in Q_p  <=>  rho(p) = 0
  Rat rho_p = h.rho.eval_real(p.z, p.w);
  bool self_mem = segre_contains(h, p, p);
  bool self_ok = self_mem == (rho_p == 0);
  rep.metrics["rho_at_point"] = rat_to_string(rho_p);
  rep.metrics["self_membership_consistent"] = self_ok;

  // reflection residual identity phi(conj p, z_p) - w_p = -rho(p)/conj(w_p)
  std::array<ComplexRational, kNumVars> at{};
  at[int(Var::Z)] = p.z;
  ComplexRational lhs = phi.eval(at) - p.w;
  ComplexRational rhs = ComplexRational(Rat(-rho_p)) / p.w.conj();
  bool reflection_ok = lhs == rhs;
  rep.metrics["reflection_identity"] = reflection_ok;

  // symmetry through a reflected point
  Point2 q = reflection(cfg.params, ComplexRational(Rat(1, 3)), p);
  bool sym_ok = segre_contains(h, p, q) && (q.w.is_zero() || segre_contains(h, q, p));
  rep.metrics["symmetry_via_reflection"] = sym_ok;

  bool ok = graph_consistent && self_ok && reflection_ok && sym_ok;
  rep.status = ok ? Status::Pass : Status::Fail;
  if (!ok)
    rep.witnesses.push_back({{"kind", "segre_point"},
                             {"point", cfg.point},
                             {"rho", rat_to_string(rho_p)}});
  return rep;
}

Report run_degree_check(const RunConfig& cfg) {
  Report rep;
  rep.check_name = "degree-check";
  rep.seed = cfg.seed;
  rep.params_echo = cfg.params_json();

  RationalMap F = [&] {
    if (cfg.map_path.empty()) return remark_212_map(cfg.params);
    std::ifstream in(cfg.map_path);
    if (!in) throw std::invalid_argument("degree-check: cannot open map file " + cfg.map_path);
    nlohmann::json j;
    in >> j;
    return RationalMap::from_json(j);
  }();
  Signature sig = cfg.signature ? Signature{cfg.signature->first, cfg.signature->second}
                                : (cfg.map_path.empty() ? hyperquadric_signature()
                                                        : Signature::ball(F.target_dim()));

  rep.metrics["deg_map"] = F.degree();
  rep.metrics["normalization_inconclusive"] = F.certificate().inconclusive;

  BaseLocus A = base_locus(F);
  rep.metrics["base_locus_finite"] = !A.non_finite;
  rep.metrics["base_locus_exact_points"] = int(A.points.size());

  DegreeCheckReport dc = generic_degree_check(F, cfg.params, 20, cfg.seed);
  rep.metrics["restricted_degrees"] = dc.restricted_degrees;
  rep.metrics["degrees_stable"] = dc.degrees_stable;
  rep.metrics["stable_degree"] = dc.stable_degree;
  rep.metrics["inequality_ok"] = dc.inequality_ok;
  if (dc.degree_through_base_point)
    rep.metrics["degree_through_base_point"] = *dc.degree_through_base_point;

  // Cramer reconstruction at a sampled base point
  Hypersurface h = make_family(cfg.params);
  std::vector<DPoint2> pool = sample_surface(h, 64, cfg.seed + 1);
  nlohmann::json cram = nlohmann::json::object();
  bool cram_ok = false;
  for (std::size_t i = 16; i < pool.size(); ++i) {
    if (std::abs(pool[i].z) < 0.1 || std::abs(pool[i].w) < 0.1) continue;
    Point2 p0 = rationalize_point(pool[i], 1UL << 12);
    if (F.denominator_at(p0).is_zero()) continue;
    Reconstruction rec = cramer_reconstruct(F, cfg.params, p0, sig, cfg.seed);
    cram = {{"pairing", rec.pairing},
            {"rank_k", rec.rank_k},
            {"orders_used", rec.orders_used},
            {"first_k_orders_suffice", rec.first_k_orders_suffice},
            {"completion_vectors", rec.n_completion_vectors},
            {"degree", rec.degree},
            {"bound", rec.bound},
            {"within_bound", rec.within_bound},
            {"matches_restriction", rec.matches_restriction},
            {"matrix_degree", rec.matrix_degree},
            {"rho_residual_at_p0", rec.rho_residual_at_p0}};
    cram_ok = rec.within_bound && rec.matches_restriction;
    break;
  }
  rep.metrics["cramer"] = cram;

  bool ok = dc.inequality_ok && dc.degrees_stable && cram_ok && !A.non_finite;
  rep.status = ok ? Status::Pass : Status::Fail;
  if (!ok)
    rep.witnesses.push_back({{"kind", "degree_check"},
                             {"restricted_degrees", dc.restricted_degrees},
                             {"deg_map", F.degree()}});
  return rep;
}

Report run_bounds(const RunConfig& cfg) {
  Report rep;
  rep.check_name = "bounds";
  rep.seed = cfg.seed;
  rep.params_echo = cfg.params_json();
  if (cfg.m < 1) throw std::invalid_argument("bounds: m must be positive");

  BoundConstant cm = c_m_constant(cfg.m);
  rep.metrics["m"] = cfg.m;
  rep.metrics["C_m"] = rat_to_string(cm.c_m);

  // extremal family (1 + z)^m attains C_m at the middle coefficient
  DiskPoly extremal;
  for (int i = 1; i <= cfg.m; ++i) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), (unsigned long)cfg.m, (unsigned long)i);
    extremal.a.push_back(ComplexRational(Rat(b)));
  }
  Rat gap(cm.c_m - extremal.a[std::size_t(cfg.m / 2) - (cfg.m % 2 == 0 ? 1 : 0)].re());
  bool attained = false;
  for (const auto& ai : extremal.a) attained = attained || ai.re() == cm.c_m;
  rep.metrics["extremal_attained"] = attained;
  rep.metrics["extremal_gap"] = rat_to_string(attained ? Rat(0) : gap);

  Rng rng = Rng(cfg.seed).derive("bounds-trials");
  nlohmann::json violations = nlohmann::json::array();
  for (int t = 0; t < cfg.trials; ++t)
    if (!random_disk_trial(rng, cfg.m)) violations.push_back(t);
  rep.metrics["trials"] = cfg.trials;
  rep.metrics["violations"] = violations;

  bool ok = attained && violations.empty();
  rep.status = ok ? Status::Pass : Status::Fail;
  if (!ok)
    rep.witnesses.push_back(
        {{"kind", "coeff_bound"}, {"m", cfg.m}, {"violations", violations}});
  return rep;
}

Report run_monodromy(const RunConfig& cfg) {
  Report rep;
  rep.check_name = "monodromy-demo";
  rep.seed = cfg.seed;
  rep.params_echo = cfg.params_json();

  SqrtDemoReport d = sqrt_w_demo();
  rep.metrics["branch_swap"] = d.swap_residual < 1e-9 ? "pass" : "fail";
  rep.metrics["double_loop_return"] = d.return_residual < 1e-9 ? "pass" : "fail";
  rep.metrics["segre_restriction_degree"] = 1;
  rep.metrics["restriction_numerator_degree"] = d.restriction_numerator_degree;
  rep.metrics["restriction_exact"] = d.restriction_exact;
  rep.metrics["residuals"] = {{"swap", d.swap_residual}, {"return", d.return_residual}};

  rep.status = d.pass ? Status::Pass : Status::Fail;
  if (!d.pass)
    rep.witnesses.push_back({{"kind", "monodromy"},
                             {"after_one_loop", {d.after_one_loop.real(), d.after_one_loop.imag()}},
                             {"after_two_loops", {d.after_two_loops.real(), d.after_two_loops.imag()}}});
  return rep;
}

// Every failing report also carries a rerun witness: the subcommand plus the
// exact knobs needed to reproduce the failure deterministically.
nlohmann::json rerun_witness(const std::string& name, const RunConfig& cfg) {
  return {{"kind", "rerun"},     {"subcommand", name},     {"seed", cfg.seed},
          {"samples", cfg.samples}, {"m", cfg.m},          {"trials", cfg.trials},
          {"map", cfg.map_path}, {"point", cfg.point},     {"grid", 0}};
}

Report run_recheck(const RunConfig& cfg) {
  Report rep;
  rep.check_name = "recheck";
  rep.seed = cfg.seed;
  if (cfg.report_path.empty()) throw std::invalid_argument("recheck: --report required");
  std::ifstream in(cfg.report_path);
  if (!in) throw std::invalid_argument("recheck: cannot open " + cfg.report_path);
  nlohmann::json j;
  in >> j;
  Report prev = Report::from_json(j);
  rep.params_echo = prev.params_echo;

  HypersurfaceParams params{rat_from_string(prev.params_echo.at("eps0").get<std::string>()),
                            rat_from_string(prev.params_echo.at("c").get<std::string>()),
                            rat_from_string(prev.params_echo.at("eps").get<std::string>())};
  Hypersurface h = make_family(params);

  int checked = 0, confirmed = 0;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& w : prev.witnesses) {
    std::string kind = w.value("kind", "");
    nlohmann::json r = {{"kind", kind}};
    if (kind == "rerun") {
      RunConfig rcfg;
      rcfg.params = params;
      rcfg.seed = w.value("seed", uint64_t(42));
      rcfg.samples = w.value("samples", 1000);
      rcfg.m = w.value("m", 8);
      rcfg.trials = w.value("trials", 200);
      rcfg.map_path = w.value("map", std::string());
      rcfg.point = w.value("point", std::string());
      RunResult again = run_subcommand(w.at("subcommand").get<std::string>(), rcfg);
      bool match = again.report.status == prev.status;
      r["status"] = status_name(again.report.status);
      r["reproduced"] = match;
      ++checked;
      confirmed += match;
    } else if (kind == "segre_point") {
      Point2 p = parse_point(w.at("point").get<std::string>());
      bool match = rat_to_string(h.rho.eval_real(p.z, p.w)) == w.at("rho").get<std::string>();
      r["reproduced"] = match;
      ++checked;
      confirmed += match;
    } else if (kind == "levi_point") {
      auto pt = w.at("point");
      DPoint2 p{{pt.at(0).get<double>(), pt.at(1).get<double>()},
                {pt.at(2).get<double>(), pt.at(3).get<double>()}};
      auto [gz, gw] = gradient(h, p);
      double gn = std::sqrt(std::norm(gz) + std::norm(gw));
      double lv = levi_scalar(h, p);
      bool match = std::abs(gn - w.at("grad_norm").get<double>()) < 1e-6 &&
                   std::abs(lv - w.at("levi_value").get<double>()) < 1e-6;
      r["reproduced"] = match;
      ++checked;
      confirmed += match;
    } else if (kind == "jacobian_rank") {
      // the witness asserts a rank drop at the point; reproduce the minor
      auto pt = w.at("point");
      DPoint2 p{{pt.at(0).get<double>(), pt.at(1).get<double>()},
                {pt.at(2).get<double>(), pt.at(3).get<double>()}};
      RationalMap F = remark_212_map(params);
      std::array<std::complex<double>, kNumVars> at{p.z, p.w, 0.0, 0.0};
      double best = 0.0;
      std::vector<std::complex<double>> jz, jw;
      for (const Poly& q : F.numerators()) {
        jz.push_back(q.derivative(Var::Z).eval_double(at));
        jw.push_back(q.derivative(Var::W).eval_double(at));
      }
      for (std::size_t a = 0; a < jz.size(); ++a)
        for (std::size_t b = a + 1; b < jz.size(); ++b)
          best = std::max(best, std::abs(jz[a] * jw[b] - jz[b] * jw[a]));
      r["max_minor"] = best;
      bool match = best < 1e-9;
      r["reproduced"] = match;
      ++checked;
      confirmed += match;
    } else if (kind == "identity_difference" || kind == "degree_check" ||
               kind == "coeff_bound" || kind == "monodromy" || kind == "recheck_mismatch") {
      r["skipped"] = true;  // summary echo; the rerun witness covers it
    } else {
      r["reproduced"] = false;
      r["note"] = "unknown witness kind";
      ++checked;
    }
    results.push_back(r);
  }
  rep.metrics["witnesses_checked"] = checked;
  rep.metrics["witnesses_confirmed"] = confirmed;
  rep.metrics["results"] = results;
  rep.status = (checked == confirmed) ? Status::Pass : Status::Fail;
  if (rep.status == Status::Fail)
    rep.witnesses.push_back({{"kind", "recheck_mismatch"}, {"results", results}});
  return rep;
}

}  // namespace

RunResult run_subcommand(const std::string& name, const RunConfig& cfg) {
  RunResult res;
  try {
    if (name == "verify-embedding")
      res.report = run_verify_embedding(cfg);
    else if (name == "levi-scan")
      res.report = run_levi_scan(cfg);
    else if (name == "segre")
      res.report = run_segre(cfg);
    else if (name == "degree-check")
      res.report = run_degree_check(cfg);
    else if (name == "bounds")
      res.report = run_bounds(cfg);
    else if (name == "monodromy-demo")
      res.report = run_monodromy(cfg);
    else if (name == "recheck")
      res.report = run_recheck(cfg);
    else
      throw std::invalid_argument("unknown subcommand: " + name);
  } catch (const std::exception& e) {
    res.report = Report{};
    res.report.check_name = name;
    res.report.seed = cfg.seed;
    res.report.status = Status::Error;
    res.report.metrics["message"] = e.what();
    res.exit_code = 2;
    return res;
  }
  if (res.report.status == Status::Fail && name != "recheck")
    res.report.witnesses.push_back(rerun_witness(name, cfg));
  res.exit_code = res.report.status == Status::Pass ? 0 : (res.report.status == Status::Fail ? 1 : 2);
  return res;
}

}  // namespace segrekit
