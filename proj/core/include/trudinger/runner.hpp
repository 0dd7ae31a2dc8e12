// Batch command execution behind the CLI: verify / solve / converge / suite.
// Writes JSON reports and CSV data under an output directory and returns the
// exit code per the contract (0 pass, 1 check-failure, 2 invalid-input,
// 3 divergence).

#ifndef TRUDINGER_RUNNER_HPP
#define TRUDINGER_RUNNER_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "trudinger/config.hpp"

namespace trudinger {

struct RunOutcome {
    int exit_code = 0;
    nlohmann::json report;
};

RunOutcome run_verify(const RunConfig& cfg, const std::string& out_dir);
RunOutcome run_solve(const RunConfig& cfg, const std::string& out_dir);
RunOutcome run_converge(const RunConfig& cfg, const std::string& out_dir);
RunOutcome run_suite(const std::string& out_dir, bool progress = true);

// Top-level dispatcher used by the CLI; catches errors into machine-readable
// error reports.
int run_command(const std::string& command, const std::string& config_path,
                const std::string& out_dir);

} // namespace trudinger

#endif
