// Numerical certification of constructed barriers: residual signs of the
// viscosity inequalities on each smooth piece, one-sided slope checks on the
// t = s ridge, continuity and extension hypotheses across the region seam,
// and the ordering items against the boundary datum. Also the quantitative
// change-of-variables identities (log transform, parabolic scaling,
// separation of variables) used by the property tests.

#ifndef TRUDINGER_VERIFIER_HPP
#define TRUDINGER_VERIFIER_HPP

#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "trudinger/barriers.hpp"

namespace trudinger {

struct ResidualSample {
    SpaceTimePoint pt;
    Piece piece = Piece::exterior;
    double residual = 0.0;
    BarrierKind orientation = BarrierKind::sub;

    bool passes(double tol) const {
        return orientation == BarrierKind::sub ? residual >= -tol : residual <= tol;
    }
};

struct PieceStats {
    std::string piece;
    long samples = 0;
    double min_residual = std::numeric_limits<double>::infinity();
    double max_residual = -std::numeric_limits<double>::infinity();
};

struct CheckOutcome {
    bool pass = true;
    double worst = 0.0; // most adverse margin seen (sign convention per check)
    long samples = 0;
};

struct VerificationReport {
    std::string barrier;
    double scale = 1.0;     // residual magnitude scale
    double tolerance = 0.0; // 1e-9 * scale
    long total_samples = 0;
    std::vector<PieceStats> pieces;
    CheckOutcome residual_sign; // piece residuals have the right sign
    CheckOutcome ridge;         // binding slope at t = s
    CheckOutcome continuity;    // value agreement across the region seam
    CheckOutcome extension;     // equals base outside, one-sided bound globally
    CheckOutcome anchor;        // item (i)
    CheckOutcome region_ordering;   // item (iii)
    CheckOutcome boundary_ordering; // item (iv), all of P_T
    bool pass = false;

    nlohmann::json to_json() const;
};

struct SweepConfig {
    long samples_per_piece = 10000;
    long boundary_samples = 10000;
    long global_samples = 10000;
    int ridge_samples = 128;
    int continuity_pairs = 128;
};

// Residual of the governing differential inequality at an analytic-jet point:
// T_p for u-variable barriers, K_p for log-variable ones, and the
// lambda-scaled K_p (in scaled time) for the outer-ball super-solution.
ResidualSample residual_at(const Barrier& b, const SpaceTimePoint& pt);

// One-sided check on the ridge slice t = s with the binding time slope
// (+k for sub-solutions, -k for super-solutions).
bool ridge_check(const Barrier& b, const SpaceTimePoint& pt, double* residual = nullptr);

VerificationReport sweep(const Barrier& b, const CylinderProblem& prob,
                         const SweepConfig& cfg = {});

// |T_p(u, jet_u) - u^{p-1} K_p(jet_eta)| for u = e^eta; vanishes on exactly
// transformed jets.
double log_equiv_residual(double u, const Jet& jet_u, const Jet& jet_eta, const Exponents& e);

// |K_p(jet) - alpha^p K_p(transformed jet)| under z = alpha x, omega = alpha^p t.
double scaling_residual(const Jet& jet_eta, double alpha, const Exponents& e);

// T_p residual of the separated function psi = phi(x) e^{ell t} given the
// spatial jet of phi; the sign is predicted by the separation lemma.
double separation_tp(double phi, const Vec& grad_phi, const Matrix& hess_phi, double ell,
                     double t, const Exponents& e);

} // namespace trudinger

#endif
