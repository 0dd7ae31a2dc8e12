// JSON run configuration: problem description (domain, exponents, datum
// expressions), barrier requests, solver and study settings.

#ifndef TRUDINGER_CONFIG_HPP
#define TRUDINGER_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "trudinger/problem.hpp"
#include "trudinger/solver.hpp"

namespace trudinger {

struct BarrierRequest {
    std::string family; // initial-sub | initial-super | side-sub | side-super
    Vec y;
    double s = 0.0;
    double eps = 0.0;
};

struct ConvergeSpec {
    std::string exact; // heat-sine | plane-wave
    Vec a;             // plane-wave direction
    std::vector<double> hs;
};

struct RunConfig {
    std::uint64_t seed = 0;
    double p = 2.0;
    int n = 2;
    double horizon = 1.0;
    std::string domain_kind;
    nlohmann::json domain_json;
    std::string f_text, g_text;

    std::vector<BarrierRequest> barriers;

    double target_h = 0.1;
    SolveConfig solver;
    GridOptions grid_options;
    SweepConfig sweep_config;

    std::optional<ConvergeSpec> converge;

    nlohmann::json raw; // canonical source for hashing
};

RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

SpatialDomain parse_domain(const nlohmann::json& j, int n);
CylinderProblem build_problem(const RunConfig& cfg);

// FNV-1a over the canonical dump; stable across platforms.
std::string config_hash(const nlohmann::json& j);

} // namespace trudinger

#endif
