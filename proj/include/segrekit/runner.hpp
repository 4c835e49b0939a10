#ifndef SEGREKIT_RUNNER_HPP
#define SEGREKIT_RUNNER_HPP

#include "segrekit/report.hpp"

namespace segrekit {

struct RunResult {
  Report report;
  int exit_code = 2;  // 0 pass, 1 fail, 2 error
};

// Dispatches a subcommand (verify-embedding, levi-scan, segre, degree-check,
// bounds, monodromy-demo, recheck) and produces its report.  Deterministic:
// the same (subcommand, config) yields a byte-identical serialized report.
RunResult run_subcommand(const std::string& name, const RunConfig& cfg);

}  // namespace segrekit

#endif
