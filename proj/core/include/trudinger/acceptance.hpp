// The acceptance matrix: nine integration criteria covering the algebraic
// identities, the barrier certification matrix with violation probes, the
// change-of-variables identities, the two solver benchmarks, and the
// principle/sandwich properties. Each criterion is self-contained and returns
// a pass flag with its metrics.

#ifndef TRUDINGER_ACCEPTANCE_HPP
#define TRUDINGER_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace trudinger {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    nlohmann::json metrics;
};

// Runs all criteria (or a subset when `only` is non-empty). Progress lines are
// written to `out` as each criterion finishes.
std::vector<CriterionResult> run_acceptance(std::ostream* out,
                                            const std::vector<int>& only = {});

} // namespace trudinger

#endif
