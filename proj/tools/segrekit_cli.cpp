#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "segrekit/runner.hpp"

using namespace segrekit;

namespace {

struct CliOptions {
  std::string config_path, out_path, map_path, point, report_path;
  uint64_t seed = 0;
  bool seed_set = false;
  int samples = 0, grid = 0, m = 0, trials = 0;
};

RunConfig build_config(const CliOptions& o) {
  RunConfig cfg;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw std::invalid_argument("cannot open config file " + o.config_path);
    nlohmann::json j;
    in >> j;
    cfg = RunConfig::from_json(j);
  }
  if (o.seed_set) cfg.seed = o.seed;
  if (o.samples > 0) cfg.samples = o.samples;
  if (o.grid > 0) cfg.grid = o.grid;
  if (o.m > 0) cfg.m = o.m;
  if (o.trials > 0) cfg.trials = o.trials;
  if (!o.out_path.empty()) cfg.out_path = o.out_path;
  if (!o.map_path.empty()) cfg.map_path = o.map_path;
  if (!o.point.empty()) cfg.point = o.point;
  if (!o.report_path.empty()) cfg.report_path = o.report_path;
  return cfg;
}

int dispatch(const std::string& name, const CliOptions& o) {
  RunConfig cfg;
  try {
    cfg = build_config(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  RunResult res = run_subcommand(name, cfg);
  std::string text = res.report.serialize();
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    out << text;
  }
  std::cout << text;
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational toolkit for a compact algebraic hypersurface family: "
               "Levi scans, Segre varieties, rational-map degree bounds, coefficient "
               "estimates, and a monodromy demo"};
  app.require_subcommand(1);

  CliOptions o;
  std::vector<CLI::App*> subs;
  for (const char* name : {"verify-embedding", "levi-scan", "segre", "degree-check", "bounds",
                           "monodromy-demo", "recheck"}) {
    CLI::App* s = app.add_subcommand(name);
    s->add_option("--config", o.config_path, "config JSON path");
    s->add_option("--out", o.out_path, "report output path");
    s->add_option("--seed", o.seed, "seed override")->each([&](const std::string&) { o.seed_set = true; });
    s->add_option("--samples", o.samples, "sample count override");
    subs.push_back(s);
  }
  app.get_subcommand("levi-scan")->add_option("--grid", o.grid, "CSV grid resolution");
  app.get_subcommand("segre")->add_option("--point", o.point,
                                          "base point \"z_re,z_im,w_re,w_im\" (rationals)");
  app.get_subcommand("degree-check")->add_option("--map", o.map_path, "map JSON path");
  app.get_subcommand("bounds")->add_option("--m", o.m, "degree bound m");
  app.get_subcommand("bounds")->add_option("--trials", o.trials, "random trials");
  app.get_subcommand("recheck")->add_option("--report", o.report_path, "report JSON to re-verify");

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* s : subs)
    if (s->parsed()) return dispatch(s->get_name(), o);
  return 2;
}
