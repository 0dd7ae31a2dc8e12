// Explicit sub/super-solution barriers: the initial-time quadratic barriers
// (u-variable), the cusp bump/indent barriers for p > n, and the outer-ball
// shell barriers for 2 <= p <= n (the super-solution via the lambda-scaled
// equation). Constructors fix every parameter from the data constants; the
// resulting objects evaluate the closed forms and their analytic jets anywhere
// in the closed cylinder.

#ifndef TRUDINGER_BARRIERS_HPP
#define TRUDINGER_BARRIERS_HPP

#include <string>
#include <variant>

#include <nlohmann/json_fwd.hpp>

#include "trudinger/problem.hpp"

namespace trudinger {

enum class BarrierKind { sub, super };
enum class BarrierFamily { initial, side_highp, side_lowp };
enum class Piece { plus_region, minus_region, exterior };

const char* to_string(BarrierKind k);
const char* to_string(BarrierFamily f);
const char* to_string(Piece p);

// Initial-time barrier (t = 0 anchor), built directly in the u variable as
// phi(r) e^{-ell t} (sub) or phi(r) e^{+ell t} (super).
struct InitialBarrierParams {
    Vec y;
    double eps = 0.0;
    double delta = 0.0;  // ball radius
    double lambda = 0.0; // elliptic rate from the quadratic profile
    double ell = 0.0;    // exponential time rate (= lambda/(p-1) in the interior case)
    double tau = 0.0;    // boundary-case time window (0 for interior placement)
    bool boundary_placement = false;
    double h_anchor = 0.0; // h(y, 0)
    double m = 0.0, M = 0.0;
    bool degenerate = false; // datum attains its extremum at the anchor
};

// Cusp barrier for p > n, in the log variable around a side anchor (y, s):
// base +/- (k tau - k|t-s| - c r^gamma)_+ with r = |x - y|.
struct SideBarrierHighP {
    Vec y;
    double s = 0.0;
    double eps = 0.0;
    double k = 0.0, tau = 0.0;
    double gamma = 0.0, c = 0.0, delta = 0.0;
    double mu = 0.0;     // exponent in the lower bound for c
    double Lambda = 0.0; // (p-n)/(p-1) - gamma
    double h_anchor = 0.0;
    double m = 0.0, M = 0.0;
    bool degenerate = false;
};

// Shell barrier for 2 <= p <= n anchored through an outer tangent ball at z:
// r = |x - z| in the shell rho <= r <= rho + delta. The super-solution is
// built in scaled time omega = lambda_scale^{p-2} t for the scaled operator.
struct SideBarrierLowP {
    Vec y;
    double s = 0.0;
    double eps = 0.0;
    Vec z;              // outer-ball center
    double rho = 0.0;   // outer-ball radius
    double gamma = 0.0; // > (n-p)/(p-1)
    double k = 0.0, tau = 0.0;
    double delta = 0.0;
    double Lambda = 0.0; // gamma - (n-p)/(p-1)
    // sub only:
    double A = 0.0; // shell-size cap constant
    // super only:
    double lambda_scale = 1.0;
    double alpha = 0.0; // log((M+2eps)/(h(y,s)+2eps))
    double eps_hat = 0.0;
    double theta = 0.0;
    double c = 1.0;
    double L = 0.0;        // residual constant; k - L/c^{p/gamma} <= 0
    double vartheta = 0.0; // p(1+gamma) - gamma
    double M_hat = 0.0;    // M^{1/lambda}
    double h_hat = 0.0;    // h(y,s)^{1/lambda}
    double h_anchor = 0.0;
    double m = 0.0, M = 0.0;
    bool degenerate = false;
};

class Barrier {
public:
    using Params = std::variant<InitialBarrierParams, SideBarrierHighP, SideBarrierLowP>;

    Barrier(BarrierKind kind, BarrierFamily family, Exponents e, double horizon, Params params);

    BarrierKind kind() const { return kind_; }
    BarrierFamily family() const { return family_; }
    const Exponents& exponents() const { return e_; }
    double horizon() const { return T_; }
    const Params& params() const { return params_; }
    bool eta_space() const { return family_ != BarrierFamily::initial; }
    std::string id() const;

    // Piecewise closed-form value in the barrier's native variable
    // (u for initial barriers, eta = log u for side barriers).
    double value(const SpaceTimePoint& pt) const;
    // Always the u-space view (exp of eta-space values).
    double value_u(const SpaceTimePoint& pt) const;
    // Value of the constant/exponential extension outside the region.
    double base_value(double t) const;

    Piece classify(const SpaceTimePoint& pt) const;
    // Analytic jet of the active smooth piece; throws OnRidge within the guard
    // band around seams and the t = s ridge.
    Jet jet(const SpaceTimePoint& pt) const;

    SpaceTimePoint anchor() const;
    // The anchor value predicted by the construction, in the governing
    // variable (scaled log variable for the low-p super-solution).
    double anchor_value() const;

    // Scaled-variable access for the low-p super-solution.
    double scaled_time(double t) const;
    double scaled_value(const Vec& x, double omega) const;
    Jet scaled_jet(const Vec& x, double omega) const;
    Piece scaled_classify(const Vec& x, double omega) const;

    nlohmann::json to_json() const;

private:
    BarrierKind kind_;
    BarrierFamily family_;
    Exponents e_;
    double T_;
    Params params_;

    double side_depth(const Vec& x, double t, double* ridge_dist = nullptr) const;
};

// Parameter derivations given the data constants and the continuity window
// (delta0, tau0). Pure functions; the make_* constructors wire them to
// local_modulus output.
InitialBarrierParams derive_initial(BarrierKind kind, const Exponents& e, double m, double M,
                                    double h_y0, double eps, const Vec& y, double delta,
                                    double tau, bool boundary_placement);
SideBarrierHighP derive_side_highp(BarrierKind kind, const Exponents& e, double m, double M,
                                   double h_ys, double eps, const Vec& y, double s,
                                   double delta0, double tau0);
SideBarrierLowP derive_side_lowp_sub(const Exponents& e, double m, double M, double h_ys,
                                     double eps, const Vec& y, double s, const Vec& z_dir_y,
                                     double rho0, double delta0, double tau0);

struct LowPSuperScaling {
    double alpha = 0.0;
    double lambda = 0.0;
    double eps_hat = 0.0;
};
// Chooses lambda = 0.9/alpha and eps_hat on the dyadic ladder eps 2^{-j}.
LowPSuperScaling derive_lowp_super_scaling(const Exponents& e, double M, double h_ys, double eps);
// Completes the scaled indent: theta, gamma, c, rho, delta from (6.20x)-chain.
// delta0/tau0 are the continuity window of the scaled datum (tau0 in scaled time).
SideBarrierLowP derive_side_lowp_super(const Exponents& e, double m, double M, double h_ys,
                                       double eps, const Vec& y, double s,
                                       const LowPSuperScaling& sc, double rho0, double delta0,
                                       double tau0_scaled);

// Problem-driven constructors.
Barrier make_initial_sub(const CylinderProblem& prob, const Vec& y, double eps);
Barrier make_initial_super(const CylinderProblem& prob, const Vec& y, double eps);
Barrier make_side_sub_highp(const CylinderProblem& prob, const Vec& y, double s, double eps);
Barrier make_side_super_highp(const CylinderProblem& prob, const Vec& y, double s, double eps);
Barrier make_side_sub_lowp(const CylinderProblem& prob, const Vec& y, double s, double eps);
Barrier make_side_super_lowp(const CylinderProblem& prob, const Vec& y, double s, double eps);

// Regime dispatch (p > n -> cusp family, p <= n -> outer-ball family).
Barrier make_side_sub(const CylinderProblem& prob, const Vec& y, double s, double eps);
Barrier make_side_super(const CylinderProblem& prob, const Vec& y, double s, double eps);

} // namespace trudinger

#endif
