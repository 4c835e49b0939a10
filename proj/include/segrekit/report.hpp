#ifndef SEGREKIT_REPORT_HPP
#define SEGREKIT_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "segrekit/hypersurface.hpp"

namespace segrekit {

inline constexpr const char* kToolVersion = "segrekit 0.1.0";

struct RunConfig {
  HypersurfaceParams params = HypersurfaceParams::canonical();
  uint64_t seed = 42;
  int samples = 10000;
  int grid = 0;
  int m = 8;
  int trials = 1000;
  std::string out_path;
  std::string map_path;
  std::string point;        // "z_re,z_im,w_re,w_im" as rationals
  std::string report_path;  // recheck input
  std::optional<std::pair<int, int>> signature;

  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json params_json() const;
};

enum class Status { Pass, Fail, Error };

const char* status_name(Status s);

struct Report {
  std::string check_name;
  Status status = Status::Error;
  nlohmann::json params_echo = nlohmann::json::object();
  nlohmann::json metrics = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::array();
  std::string tool_version = kToolVersion;
  uint64_t seed = 0;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& j);
  std::string serialize() const { return to_json().dump(2) + "\n"; }
};

}  // namespace segrekit

#endif
