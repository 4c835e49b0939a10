#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "segrekit/bounds.hpp"
#include "segrekit/embedding.hpp"
#include "segrekit/monodromy.hpp"
#include "segrekit/poly_json.hpp"
#include "segrekit/runner.hpp"
#include "segrekit/segre.hpp"

namespace py = pybind11;
using namespace segrekit;

namespace {

HypersurfaceParams params_from(const std::string& eps0, const std::string& c,
                               const std::string& eps) {
  HypersurfaceParams p{rat_from_string(eps0), rat_from_string(c), rat_from_string(eps)};
  p.validate();
  return p;
}

Point2 point_from(const std::vector<std::string>& coords) {
  if (coords.size() != 4)
    throw std::invalid_argument("point: expected [z_re, z_im, w_re, w_im] rationals");
  return {ComplexRational(rat_from_string(coords[0]), rat_from_string(coords[1])),
          ComplexRational(rat_from_string(coords[2]), rat_from_string(coords[3]))};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact kernels for the hypersurface family toolkit";
  m.attr("__version__") = kToolVersion;

  m.def("degree_bound", &degree_bound, py::arg("N"),
        "restriction-degree bound 7 N (N+1) / 2");

  m.def(
      "rho",
      [](const std::string& eps0, const std::string& c, const std::string& eps,
         std::complex<double> z, std::complex<double> w) {
        return make_family(params_from(eps0, c, eps)).rho.eval_real_double(z, w);
      },
      py::arg("eps0"), py::arg("c"), py::arg("eps"), py::arg("z"), py::arg("w"),
      "defining function of the family at a point");

  m.def(
      "levi_scalar",
      [](const std::string& eps0, const std::string& c, const std::string& eps,
         std::complex<double> z, std::complex<double> w) {
        return levi_scalar(make_family(params_from(eps0, c, eps)), DPoint2{z, w});
      },
      py::arg("eps0"), py::arg("c"), py::arg("eps"), py::arg("z"), py::arg("w"),
      "scalar Levi form on the tangent vector (rho_w, -rho_z)");

  m.def(
      "segre_phi_coeffs",
      [](const std::string& eps0, const std::string& c, const std::string& eps,
         const std::vector<std::string>& point) {
        Poly phi = segre_graph(params_from(eps0, c, eps), point_from(point));
        std::vector<std::complex<double>> out;
        for (const ComplexRational& cc : phi.univariate_coeffs(Var::Z))
          out.push_back(cc.to_complex());
        return out;
      },
      py::arg("eps0"), py::arg("c"), py::arg("eps"), py::arg("point"),
      "coefficients of the Segre graph polynomial, constant term first");

  m.def(
      "reflection",
      [](const std::string& eps0, const std::string& c, const std::string& eps,
         std::complex<double> xi, const std::vector<std::string>& point) {
        Point2 r = reflection(params_from(eps0, c, eps),
                              crat_rationalize(xi, 1UL << 24), point_from(point));
        return std::make_pair(r.z.to_complex(), r.w.to_complex());
      },
      py::arg("eps0"), py::arg("c"), py::arg("eps"), py::arg("xi"), py::arg("point"));

  m.def(
      "verify_embedding_identity",
      [](const std::string& eps0, const std::string& c, const std::string& eps) {
        return verify_identity_symbolic(rat_from_string(eps0), rat_from_string(c),
                                        rat_from_string(eps));
      },
      py::arg("eps0"), py::arg("c"), py::arg("eps"),
      "exact hyperquadric identity, quadratic-extension arithmetic");

  m.def(
      "restricted_degree",
      [](const std::string& eps0, const std::string& c, const std::string& eps,
         const std::vector<std::string>& point) {
        HypersurfaceParams p = params_from(eps0, c, eps);
        return restrict_to_segre(remark_212_map(p), p, point_from(point)).degree;
      },
      py::arg("eps0"), py::arg("c"), py::arg("eps"), py::arg("point"),
      "degree of the embedding map restricted to the Segre variety at point");

  m.def("c_m_constant", [](int mm) { return rat_to_string(c_m_constant(mm).c_m); },
        py::arg("m"));

  m.def("sqrt_w_demo", [] {
    SqrtDemoReport d = sqrt_w_demo();
    py::dict out;
    out["pass"] = d.pass;
    out["swap_residual"] = d.swap_residual;
    out["return_residual"] = d.return_residual;
    out["restriction_numerator_degree"] = d.restriction_numerator_degree;
    return out;
  });

  m.def(
      "run",
      [](const std::string& subcommand, const std::string& config_json) {
        RunConfig cfg = config_json.empty()
                            ? RunConfig{}
                            : RunConfig::from_json(nlohmann::json::parse(config_json));
        RunResult res = run_subcommand(subcommand, cfg);
        return std::make_pair(res.exit_code, res.report.serialize());
      },
      py::arg("subcommand"), py::arg("config_json") = std::string(),
      "dispatch a subcommand; returns (exit_code, report_json)");
}
