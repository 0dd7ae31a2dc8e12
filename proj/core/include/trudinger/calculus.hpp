// Pointwise algebra for the doubly nonlinear equation in both variables:
// the jet forms L_p, T_p, K_p, the lambda-scaled K_p, the radial p-Laplacian
// and the power-radial residual. All functions are pure and thread-safe.

#ifndef TRUDINGER_CALCULUS_HPP
#define TRUDINGER_CALCULUS_HPP

#include <cmath>

#include "trudinger/errors.hpp"
#include "trudinger/linalg.hpp"

namespace trudinger {

// Exponent pair (p, n) with p >= 2. n = 1 is permitted for test oracles even
// though the underlying theory assumes n >= 2.
struct Exponents {
    double p;
    int n;

    Exponents(double p_, int n_) : p(p_), n(n_) {
        if (!(p >= 2.0)) throw InvalidInput("Exponents: p must be >= 2");
        if (n < 1) throw InvalidInput("Exponents: n must be >= 1");
    }
    double sigma() const { return p + n - 2; } // sigma_p = p + n - 2
};

// Parabolic second-order jet (time slope, gradient, spatial Hessian).
struct Jet {
    double time_slope = 0.0;
    Vec gradient;
    Matrix hessian;

    Jet() = default;
    Jet(double a, Vec q, Matrix x)
        : time_slope(a), gradient(std::move(q)), hessian(std::move(x)) {
        if (!hessian.symmetric()) throw InvalidInput("Jet: Hessian must be symmetric");
        if (static_cast<int>(gradient.size()) != hessian.size())
            throw InvalidInput("Jet: gradient/Hessian dimension mismatch");
    }
    int dim() const { return static_cast<int>(gradient.size()); }
};

// Radial slice of a profile f(r): value, f'(r), f''(r) at a radius r > 0.
struct RadialProfile {
    double value;
    double d1;
    double d2;
    double r;
};

// Parameters of the power-radial family +/- c r^gamma with drift coefficient
// lambda in front of the gradient term.
struct PowerRadialParams {
    double c;      // amplitude > 0
    double gamma;  // exponent, nonzero
    int sign;      // +1 or -1
    double lambda; // drift coefficient

    double Lambda(const Exponents& e) const { return (e.p - e.n) / (e.p - 1.0) - gamma; }
};

// L_p(q, X): |q|^{p-2} tr X + (p-2) |q|^{p-4} q_i q_j X_ij, with the p = 2 and
// q = 0 branches. The middle term is evaluated as |q|^{p-2} (qhat.X.qhat) to
// stay finite for small |q| and 2 <= p < 4.
inline double lp_form(const Vec& q, const Matrix& x, const Exponents& e) {
    if (!x.symmetric()) throw InvalidInput("lp_form: X must be symmetric");
    if (static_cast<int>(q.size()) != x.size())
        throw InvalidInput("lp_form: dimension mismatch");
    if (e.p == 2.0) return x.trace();
    const double qn = norm(q);
    if (qn == 0.0) return 0.0;
    Vec qhat = (1.0 / qn) * q;
    return std::pow(qn, e.p - 2.0) * (x.trace() + (e.p - 2.0) * x.quad(qhat));
}

// T_p(r, a, q, X) = L_p(q, X) - (p-1) |r|^{p-2} a  (u-variable inequality form).
inline double tp_form(double r, const Jet& jet, const Exponents& e) {
    const double w = (e.p == 2.0) ? 1.0 : std::pow(std::abs(r), e.p - 2.0);
    return lp_form(jet.gradient, jet.hessian, e) - (e.p - 1.0) * w * jet.time_slope;
}

// K_p(a, q, X) = L_p(q, X) + (p-1)|q|^p - (p-1) a  (log-variable form).
inline double kp_form(const Jet& jet, const Exponents& e) {
    const double qn = norm(jet.gradient);
    return lp_form(jet.gradient, jet.hessian, e) + (e.p - 1.0) * std::pow(qn, e.p) -
           (e.p - 1.0) * jet.time_slope;
}

// Lambda-scaled variant L_p + lambda (p-1)|q|^p - (p-1) a; equals kp_form at
// lambda = 1. Used by the scaled outer-ball super-solution.
inline double kp_lambda_form(const Jet& jet, double lambda, const Exponents& e) {
    if (!(lambda > 0.0)) throw InvalidInput("kp_lambda_form: lambda must be > 0");
    const double qn = norm(jet.gradient);
    return lp_form(jet.gradient, jet.hessian, e) + lambda * (e.p - 1.0) * std::pow(qn, e.p) -
           (e.p - 1.0) * jet.time_slope;
}

// Radial p-Laplacian |f'|^{p-2} ((p-1) f'' + (n-1)/r f') at r > 0.
inline double radial_plaplacian(const RadialProfile& prof, const Exponents& e) {
    if (!(prof.r > 0.0)) throw DomainViolation("radial_plaplacian: r must be > 0");
    const double w = (e.p == 2.0) ? 1.0 : std::pow(std::abs(prof.d1), e.p - 2.0);
    return w * ((e.p - 1.0) * prof.d2 + (e.n - 1.0) / prof.r * prof.d1);
}

// Real power via exp(g log r); preconditions keep the base positive.
inline double rpow(double r, double g) { return std::exp(g * std::log(r)); }

// Residual Delta_p(+/- c r^gamma) + lambda (p-1) |D(+/- c r^gamma)|^p
//   = (p-1) c^{p-1} |gamma|^p r^{p(gamma-1)} { c lambda +/- (-Lambda/(gamma r^gamma)) }.
inline double power_radial_residual(const PowerRadialParams& prm, double r, const Exponents& e) {
    if (!(r > 0.0)) throw DomainViolation("power_radial_residual: r must be > 0");
    if (prm.gamma == 0.0) throw InvalidInput("power_radial_residual: gamma must be nonzero");
    if (!(prm.c > 0.0)) throw InvalidInput("power_radial_residual: c must be > 0");
    if (prm.sign != 1 && prm.sign != -1)
        throw InvalidInput("power_radial_residual: sign must be +1 or -1");
    const double L = prm.Lambda(e);
    const double ag = std::abs(prm.gamma);
    const double pref = (e.p - 1.0) * std::pow(prm.c, e.p - 1.0) * std::pow(ag, e.p) *
                        rpow(r, e.p * (prm.gamma - 1.0));
    const double bracket = prm.c * prm.lambda +
                           prm.sign * (-L / (prm.gamma * rpow(r, prm.gamma)));
    return pref * bracket;
}

// Chain rule for u = e^eta: maps an eta-jet to the corresponding u-jet.
inline Jet exp_jet(double eta, const Jet& jet_eta) {
    const double u = std::exp(eta);
    Vec grad_u = u * jet_eta.gradient;
    Matrix hess_u = outer(jet_eta.gradient, jet_eta.gradient);
    hess_u += jet_eta.hessian;
    hess_u *= u;
    return Jet(u * jet_eta.time_slope, std::move(grad_u), std::move(hess_u));
}

} // namespace trudinger

#endif
