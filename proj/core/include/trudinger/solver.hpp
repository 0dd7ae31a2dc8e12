// Explicit finite-difference marching for the log-transformed equation
// eta_t = [L_p(D eta, D^2 eta) + (p-1)|D eta|^p] / (p-1) on masked grids,
// with the maximum-principle, comparison and barrier-sandwich reports and a
// convergence study against exact solutions.

#ifndef TRUDINGER_SOLVER_HPP
#define TRUDINGER_SOLVER_HPP

#include <nlohmann/json_fwd.hpp>

#include "trudinger/barriers.hpp"
#include "trudinger/grid.hpp"
#include "trudinger/verifier.hpp"

namespace trudinger {

struct SolveConfig {
    double cfl_safety = 0.5;   // in (0, 1]
    double gradient_cap = 1.0; // estimate of sup |D eta|
    double end_time = 0.0;
    double snapshot_dt = 0.0;           // 0: only first and last
    std::vector<double> extra_snapshot_times; // e.g. barrier anchor times
    long max_steps = 50'000'000;
};

struct Trajectory {
    std::vector<GridField> snapshots;
    long steps = 0;
    double gradient_cap_used = 0.0;
    double dt_min = 0.0;
};

// Spatial right-hand side L_p(q_h, X_h) + (p-1)|q_h|^p at an interior node
// (central differences; cross terms by four-point stencils).
double discrete_kp(const GridField& field, long node, const Exponents& e);

// Stability bound combining the parabolic and advective restrictions.
double cfl_dt(const GridField& field, const Exponents& e, const SolveConfig& cfg);

// One explicit step to time field.time + dt; boundary nodes are refreshed from
// bc(projection, t_new) = log h. Reports the max discrete gradient seen.
GridField step(const GridField& field, double dt,
               const std::function<double(const Vec&, double)>& bc_log, const Exponents& e,
               const SolveConfig& cfg, double* max_gradient = nullptr);

Trajectory solve(const CylinderProblem& prob, std::shared_ptr<const Grid> grid,
                 const SolveConfig& cfg);

struct MaxPrincipleReport {
    double sup_h = 0.0, inf_h = 0.0;
    double worst_overshoot = 0.0;  // max over snapshots of (max_int u - sup h)
    double worst_undershoot = 0.0; // max over snapshots of (inf h - min_int u)
    bool pass = false;
    nlohmann::json to_json() const;
};
MaxPrincipleReport max_principle_report(const Trajectory& traj, const CylinderProblem& prob,
                                        double tol);

struct ComparisonReport {
    double min_ordering_margin = 0.0; // min over nodes/snapshots of (v - u)
    double quotient_sup_interior = 0.0;
    double quotient_sup_boundary = 0.0;
    bool ordering_pass = false;
    bool quotient_pass = false;
    nlohmann::json to_json() const;
};
ComparisonReport comparison_report(const Trajectory& traj_u, const Trajectory& traj_v,
                                   double tol);

struct SandwichReport {
    double worst_sub_margin = 0.0;   // min (u_num - sub) over region nodes
    double worst_super_margin = 0.0; // min (super - u_num)
    long region_nodes = 0;
    double anchor_value = 0.0; // u_num at nearest node/snapshot to the anchor
    double anchor_datum = 0.0; // h(y, s)
    double anchor_slack = 0.0; // barrier decay between the anchor and that node
    bool pass = false;
    nlohmann::json to_json() const;
};
SandwichReport barrier_sandwich_report(const Trajectory& traj, const Barrier& sub,
                                       const VerificationReport& sub_report,
                                       const Barrier& super,
                                       const VerificationReport& super_report,
                                       double tol_disc);

// Exact solutions usable as boundary data and error references.
class ExactSolution {
public:
    enum class Kind { heat_sine, plane_wave };

    static ExactSolution heat_sine();                    // p = 2: 2 + sin(x1) e^{-t}
    static ExactSolution plane_wave(Vec a, double p);    // exp(a.x + |a|^p t)

    Kind kind() const { return kind_; }
    double u(const Vec& x, double t) const;
    BoundaryDatum datum() const;
    double required_p() const { return p_; }

private:
    Kind kind_;
    Vec a_;
    double p_ = 0.0;
};

struct ConvergenceRow {
    double h = 0.0;
    double error = 0.0;
    double order = 0.0; // log2(e_prev / e); 0 on the first row
};
std::vector<ConvergenceRow> convergence_study(const CylinderProblem& prob,
                                              const ExactSolution& exact,
                                              const std::vector<double>& hs,
                                              const SolveConfig& cfg, const GridOptions& gopts);

} // namespace trudinger

#endif
