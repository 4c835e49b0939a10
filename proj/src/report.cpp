#include "segrekit/report.hpp"

namespace segrekit {

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  if (j.contains("eps0")) c.params.eps0 = rat_from_string(j.at("eps0").get<std::string>());
  if (j.contains("c")) c.params.c = rat_from_string(j.at("c").get<std::string>());
  if (j.contains("eps")) c.params.eps = rat_from_string(j.at("eps").get<std::string>());
  if (j.contains("seed")) c.seed = j.at("seed").get<uint64_t>();
  if (j.contains("samples")) c.samples = j.at("samples").get<int>();
  if (j.contains("grid")) c.grid = j.at("grid").get<int>();
  if (j.contains("m")) c.m = j.at("m").get<int>();
  if (j.contains("trials")) c.trials = j.at("trials").get<int>();
  if (j.contains("map")) c.map_path = j.at("map").get<std::string>();
  if (j.contains("point")) c.point = j.at("point").get<std::string>();
  if (j.contains("signature")) {
    auto sig = j.at("signature");
    c.signature = std::make_pair(sig.at(0).get<int>(), sig.at(1).get<int>());
  }
  c.params.validate();
  return c;
}

nlohmann::json RunConfig::params_json() const {
  return {{"eps0", rat_to_string(params.eps0)},
          {"c", rat_to_string(params.c)},
          {"eps", rat_to_string(params.eps)}};
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

nlohmann::json Report::to_json() const {
  return {{"check_name", check_name}, {"status", status_name(status)},
          {"params", params_echo},    {"metrics", metrics},
          {"witnesses", witnesses},   {"tool_version", tool_version},
          {"seed", seed}};
}

Report Report::from_json(const nlohmann::json& j) {
  Report r;
  r.check_name = j.at("check_name").get<std::string>();
  std::string s = j.at("status").get<std::string>();
  r.status = s == "pass" ? Status::Pass : (s == "fail" ? Status::Fail : Status::Error);
  r.params_echo = j.at("params");
  r.metrics = j.at("metrics");
  r.witnesses = j.at("witnesses");
  r.tool_version = j.at("tool_version").get<std::string>();
  r.seed = j.at("seed").get<uint64_t>();
  return r;
}

}  // namespace segrekit
