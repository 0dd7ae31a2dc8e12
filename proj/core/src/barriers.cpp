#include "trudinger/barriers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace trudinger {

namespace {

constexpr double kDegenerateTol = 1e-12;

void require_margin(double eps, double m) {
    if (!(eps > 0.0) || !(eps < 0.5 * m))
        throw InvalidInput("barrier: need 0 < eps < m/2 so that m - 2 eps > 0");
}

Vec unit_from(const Vec& x, const Vec& center, double& r) {
    Vec d = x - center;
    r = norm(d);
    if (r == 0.0) {
        d.assign(x.size(), 0.0);
        d[0] = 1.0;
        return d;
    }
    return (1.0 / r) * d;
}

} // namespace

const char* to_string(BarrierKind k) { return k == BarrierKind::sub ? "sub" : "super"; }

const char* to_string(BarrierFamily f) {
    switch (f) {
        case BarrierFamily::initial: return "initial";
        case BarrierFamily::side_highp: return "side-highp";
        case BarrierFamily::side_lowp: return "side-lowp";
    }
    return "?";
}

const char* to_string(Piece p) {
    switch (p) {
        case Piece::plus_region: return "R+";
        case Piece::minus_region: return "R-";
        case Piece::exterior: return "exterior";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Parameter derivations
// ---------------------------------------------------------------------------

InitialBarrierParams derive_initial(BarrierKind kind, const Exponents& e, double m, double M,
                                    double h_y0, double eps, const Vec& y, double delta,
                                    double tau, bool boundary_placement) {
    require_margin(eps, m);
    InitialBarrierParams prm;
    prm.y = y;
    prm.eps = eps;
    prm.h_anchor = h_y0;
    prm.m = m;
    prm.M = M;
    prm.boundary_placement = boundary_placement;

    const double gap = (kind == BarrierKind::sub) ? h_y0 - m : M - h_y0;
    if (gap <= kDegenerateTol * std::max(1.0, m)) {
        prm.degenerate = true;
        return prm;
    }
    if (!(delta > 0.0)) throw InvalidInput("derive_initial: delta must be > 0");

    prm.delta = delta;
    const double denom = (kind == BarrierKind::sub) ? m - 2 * eps : h_y0 + 2 * eps;
    prm.lambda = e.sigma() * std::pow(2.0, e.p - 1.0) / std::pow(delta, e.p) *
                 std::pow(gap / denom, e.p - 1.0);
    prm.ell = prm.lambda / (e.p - 1.0);
    if (boundary_placement) {
        if (!(tau > 0.0)) throw InvalidInput("derive_initial: boundary case needs tau > 0");
        prm.tau = tau;
        const double rate = (kind == BarrierKind::sub)
                                ? std::log((h_y0 - 2 * eps) / (m - 2 * eps)) / tau
                                : std::log((M + 2 * eps) / (h_y0 + 2 * eps)) / tau;
        prm.ell = std::max(prm.ell, rate);
    }
    return prm;
}

SideBarrierHighP derive_side_highp(BarrierKind kind, const Exponents& e, double m, double M,
                                   double h_ys, double eps, const Vec& y, double s,
                                   double delta0, double tau0) {
    require_margin(eps, m);
    if (!(e.p > e.n)) throw WrongRegime("cusp barriers require p > n");
    SideBarrierHighP prm;
    prm.y = y;
    prm.s = s;
    prm.eps = eps;
    prm.h_anchor = h_ys;
    prm.m = m;
    prm.M = M;

    const double ratio = (kind == BarrierKind::sub) ? (h_ys - 2 * eps) / (m - 2 * eps)
                                                    : (M + 2 * eps) / (h_ys + 2 * eps);
    const double ktau_raw = std::log(ratio);
    if (ktau_raw <= kDegenerateTol) {
        prm.degenerate = true;
        return prm;
    }

    prm.tau = std::min(tau0, 1.0);
    prm.k = ktau_raw / prm.tau;
    const double ktau = prm.k * prm.tau;
    const double alpha = (e.p - e.n) / (e.p - 1.0);

    double c_min;
    if (kind == BarrierKind::sub) {
        prm.gamma = alpha; // Lambda = 0
        prm.Lambda = 0.0;
        prm.mu = (prm.gamma + e.p * (1.0 - prm.gamma)) / e.p;
        c_min = std::pow(ktau, prm.mu) /
                (std::pow(prm.gamma, prm.gamma) * std::pow(prm.tau, prm.gamma / e.p));
    } else {
        prm.gamma = alpha / (1.0 + 2.0 * ktau);
        prm.Lambda = alpha - prm.gamma;
        prm.mu = e.p * (1.0 - prm.gamma) / prm.gamma + 2.0;
        c_min = std::pow(2.0 * std::pow(ktau, prm.mu) /
                             (prm.tau * prm.Lambda * std::pow(prm.gamma, e.p - 1.0)),
                         prm.gamma / e.p);
    }
    // Raise c above its lower bound if needed to keep the cusp inside the
    // continuity ball: delta = (k tau / c)^{1/gamma} <= delta0.
    const double c_fit = ktau / std::pow(delta0, prm.gamma);
    prm.c = std::max(c_min, c_fit);
    prm.delta = std::pow(ktau / prm.c, 1.0 / prm.gamma);
    return prm;
}

SideBarrierLowP derive_side_lowp_sub(const Exponents& e, double m, double M, double h_ys,
                                     double eps, const Vec& y, double s, const Vec& normal,
                                     double rho0, double delta0, double tau0) {
    require_margin(eps, m);
    if (!(e.p <= e.n)) throw WrongRegime("outer-ball barriers require 2 <= p <= n");
    SideBarrierLowP prm;
    prm.y = y;
    prm.s = s;
    prm.eps = eps;
    prm.h_anchor = h_ys;
    prm.m = m;
    prm.M = M;

    const double ktau_raw = std::log((h_ys - 2 * eps) / (m - 2 * eps));
    if (ktau_raw <= kDegenerateTol) {
        prm.degenerate = true;
        return prm;
    }
    prm.gamma = (e.n - e.p) / (e.p - 1.0) + 1.0;
    prm.Lambda = 1.0;
    prm.tau = std::min(tau0, 1.0);
    prm.k = ktau_raw / prm.tau;
    const double ktau = prm.k * prm.tau;

    prm.A = std::pow(std::pow(prm.gamma, e.p) / prm.k, prm.gamma / (e.p * (1.0 + prm.gamma)));
    const double cap_kt = std::pow(ktau, -1.0 / prm.gamma);
    const double cap_A = std::pow(prm.A / (1.0 + ktau * prm.A), 1.0 / prm.gamma);
    const double B = std::pow(0.5 * delta0, prm.gamma);
    const double cap_shell = std::pow(B / (1.0 + ktau * B), 1.0 / prm.gamma);
    prm.rho = std::min(std::min(rho0, cap_kt), std::min(cap_A, cap_shell));
    const double rg = std::pow(prm.rho, prm.gamma);
    prm.delta = prm.rho * (std::pow(1.0 / (1.0 - rg * ktau), 1.0 / prm.gamma) - 1.0);
    prm.z = y + prm.rho * normal;
    return prm;
}

LowPSuperScaling derive_lowp_super_scaling(const Exponents& e, double M, double h_ys,
                                           double eps) {
    LowPSuperScaling sc;
    sc.alpha = std::log((M + 2 * eps) / (h_ys + 2 * eps));
    if (sc.alpha <= kDegenerateTol) return sc; // degenerate anchor at the maximum
    sc.lambda = 0.9 / sc.alpha;
    const double il = 1.0 / sc.lambda;
    for (int j = 0; j <= 20; ++j) {
        const double eh = eps * std::pow(2.0, -j);
        const bool c1 = std::pow(h_ys, il) + 2 * eh <= std::pow(h_ys + 2 * eps, il);
        const double lkt =
            sc.lambda * std::log((std::pow(M, il) + 2 * eh) / (std::pow(h_ys, il) + 2 * eh));
        if (c1 && lkt < 1.0) {
            sc.eps_hat = eh;
            return sc;
        }
    }
    throw MarginSearchFailure(
        "low-p super-solution: no eps-hat on the dyadic ladder satisfies the margin chain");
}

SideBarrierLowP derive_side_lowp_super(const Exponents& e, double m, double M, double h_ys,
                                       double eps, const Vec& y, double s,
                                       const LowPSuperScaling& sc, double rho0, double delta0,
                                       double tau0_scaled) {
    require_margin(eps, m);
    if (!(e.p <= e.n)) throw WrongRegime("outer-ball barriers require 2 <= p <= n");
    SideBarrierLowP prm;
    prm.y = y;
    prm.s = s;
    prm.eps = eps;
    prm.h_anchor = h_ys;
    prm.m = m;
    prm.M = M;
    prm.alpha = sc.alpha;

    if (sc.alpha <= kDegenerateTol) {
        prm.degenerate = true;
        prm.lambda_scale = 1.0;
        return prm;
    }
    prm.lambda_scale = sc.lambda;
    prm.eps_hat = sc.eps_hat;
    prm.M_hat = std::pow(M, 1.0 / sc.lambda);
    prm.h_hat = std::pow(h_ys, 1.0 / sc.lambda);

    prm.tau = std::min(tau0_scaled, 1.0);
    prm.k = std::log((prm.M_hat + 2 * prm.eps_hat) / (prm.h_hat + 2 * prm.eps_hat)) / prm.tau;
    const double lkt = prm.lambda_scale * prm.k * prm.tau;
    if (!(lkt < 1.0))
        throw MarginSearchFailure("low-p super-solution: lambda k tau >= 1 after scaling");

    const double ratio = (e.n - e.p) / (e.p - 1.0);
    if (ratio <= kDegenerateTol) {
        // p = n: Lambda/gamma = 1 pins theta; gamma is free.
        prm.theta = std::sqrt(lkt);
        prm.gamma = 1.0;
    } else {
        // Ladder from 1/2 toward 1; theta^2 must exceed lambda k tau with a
        // margin, otherwise gamma blows up.
        double theta = 0.5;
        while (theta * theta < lkt + 0.1 * (1.0 - lkt)) theta = 0.5 * (1.0 + theta);
        prm.theta = theta;
        prm.gamma = ratio / (1.0 - lkt / (theta * theta));
    }
    prm.Lambda = prm.gamma - ratio;
    prm.vartheta = e.p * (1.0 + prm.gamma) - prm.gamma;

    const double ktau = prm.k * prm.tau;
    prm.L = prm.Lambda * std::pow(prm.gamma, e.p - 1.0) *
            std::pow(ktau, prm.vartheta / prm.gamma) *
            std::pow(std::pow(1.0 - prm.theta, e.p * (1.0 + prm.gamma)) /
                         std::pow(prm.theta, prm.vartheta),
                     1.0 / prm.gamma);

    const double c_resid = std::pow(prm.L / prm.k, prm.gamma / e.p);
    const double c_shell =
        std::pow(0.5 * delta0, prm.gamma) * ktau * (1.0 - prm.theta) / prm.theta;
    const double c_rho = std::pow(rho0, prm.gamma) * ktau / prm.theta;
    prm.c = std::min(c_resid, std::min(c_shell, c_rho));

    prm.rho = std::pow(prm.c * prm.theta / ktau, 1.0 / prm.gamma);
    prm.delta = prm.rho * (std::pow(1.0 / (1.0 - prm.theta), 1.0 / prm.gamma) - 1.0);
    return prm;
}

// ---------------------------------------------------------------------------
// Barrier evaluation
// ---------------------------------------------------------------------------

Barrier::Barrier(BarrierKind kind, BarrierFamily family, Exponents e, double horizon,
                 Params params)
    : kind_(kind), family_(family), e_(e), T_(horizon), params_(std::move(params)) {}

std::string Barrier::id() const {
    std::ostringstream os;
    os << to_string(family_) << "-" << to_string(kind_) << "@(";
    const SpaceTimePoint a = anchor();
    for (std::size_t i = 0; i < a.x.size(); ++i) os << (i ? "," : "") << a.x[i];
    os << ";" << a.t << ")";
    return os.str();
}

SpaceTimePoint Barrier::anchor() const {
    if (auto* p = std::get_if<InitialBarrierParams>(&params_)) return {p->y, 0.0};
    if (auto* p = std::get_if<SideBarrierHighP>(&params_)) return {p->y, p->s};
    auto& p = std::get<SideBarrierLowP>(params_);
    return {p.y, p.s};
}

double Barrier::anchor_value() const {
    if (auto* p = std::get_if<InitialBarrierParams>(&params_)) {
        if (p->degenerate) return kind_ == BarrierKind::sub ? p->m : p->M;
        return kind_ == BarrierKind::sub ? p->h_anchor - 2 * p->eps : p->h_anchor + 2 * p->eps;
    }
    if (auto* p = std::get_if<SideBarrierHighP>(&params_))
        return kind_ == BarrierKind::sub ? std::log(p->h_anchor - 2 * p->eps)
                                         : std::log(p->h_anchor + 2 * p->eps);
    auto& p = std::get<SideBarrierLowP>(params_);
    if (kind_ == BarrierKind::sub) return std::log(p.h_anchor - 2 * p.eps);
    if (p.degenerate) return std::log(p.M + 2 * p.eps);
    return std::log(p.h_hat + 2 * p.eps_hat); // scaled item (i)
}

double Barrier::base_value(double t) const {
    if (auto* p = std::get_if<InitialBarrierParams>(&params_)) {
        if (p->degenerate) return kind_ == BarrierKind::sub ? p->m : p->M;
        return kind_ == BarrierKind::sub ? (p->m - 2 * p->eps) * std::exp(-p->ell * t)
                                         : (p->M + 2 * p->eps) * std::exp(p->ell * t);
    }
    if (auto* p = std::get_if<SideBarrierHighP>(&params_))
        return kind_ == BarrierKind::sub ? std::log(p->m - 2 * p->eps)
                                         : std::log(p->M + 2 * p->eps);
    auto& p = std::get<SideBarrierLowP>(params_);
    if (kind_ == BarrierKind::sub) return std::log(p.m - 2 * p.eps);
    if (p.degenerate) return std::log(p.M + 2 * p.eps);
    return p.lambda_scale * std::log(p.M_hat + 2 * p.eps_hat);
}

// Signed depth of the side-barrier region at (x, t): positive inside R,
// negative outside, zero on the seam. ridge_dist gets |t - s| (scaled time for
// the low-p super).
double Barrier::side_depth(const Vec& x, double t, double* ridge_dist) const {
    if (auto* p = std::get_if<SideBarrierHighP>(&params_)) {
        double r;
        unit_from(x, p->y, r);
        if (ridge_dist) *ridge_dist = std::abs(t - p->s);
        if (p->degenerate) return -1.0;
        return p->k * p->tau - p->k * std::abs(t - p->s) - p->c * rpow(std::max(r, 1e-300), p->gamma);
    }
    auto& p = std::get<SideBarrierLowP>(params_);
    if (p.degenerate) {
        if (ridge_dist) *ridge_dist = std::abs(t - p.s);
        return -1.0;
    }
    double r;
    unit_from(x, p.z, r);
    r = std::max(r, p.rho); // the open outer ball never meets the closed domain
    if (kind_ == BarrierKind::sub) {
        if (ridge_dist) *ridge_dist = std::abs(t - p.s);
        return p.k * p.tau - p.k * std::abs(t - p.s) + rpow(r, -p.gamma) - rpow(p.rho, -p.gamma);
    }
    const double omega = t; // callers pass scaled time for the super-solution
    const double s_hat = scaled_time(p.s);
    if (ridge_dist) *ridge_dist = std::abs(omega - s_hat);
    return p.k * p.tau - p.k * std::abs(omega - s_hat) +
           p.c * (rpow(r, -p.gamma) - rpow(p.rho, -p.gamma));
}

double Barrier::scaled_time(double t) const {
    auto& p = std::get<SideBarrierLowP>(params_);
    return std::pow(p.lambda_scale, e_.p - 2.0) * t;
}

double Barrier::value(const SpaceTimePoint& pt) const {
    if (auto* p = std::get_if<InitialBarrierParams>(&params_)) {
        if (p->degenerate) return kind_ == BarrierKind::sub ? p->m : p->M;
        double r;
        unit_from(pt.x, p->y, r);
        const double expf = std::exp((kind_ == BarrierKind::sub ? -1.0 : 1.0) * p->ell * pt.t);
        if (r > p->delta) return base_value(pt.t);
        const double rr = (r * r) / (p->delta * p->delta);
        const double phi = (kind_ == BarrierKind::sub)
                               ? p->h_anchor - 2 * p->eps - (p->h_anchor - p->m) * rr
                               : p->h_anchor + 2 * p->eps + (p->M - p->h_anchor) * rr;
        return phi * expf;
    }
    if (family_ == BarrierFamily::side_highp || kind_ == BarrierKind::sub) {
        const double d = std::max(side_depth(pt.x, pt.t), 0.0);
        return base_value(pt.t) + (kind_ == BarrierKind::sub ? d : -d);
    }
    // low-p super: eta(x,t) = lambda * phi(x, lambda^{p-2} t)
    auto& p = std::get<SideBarrierLowP>(params_);
    return p.lambda_scale * scaled_value(pt.x, scaled_time(pt.t));
}

double Barrier::value_u(const SpaceTimePoint& pt) const {
    const double v = value(pt);
    return eta_space() ? std::exp(v) : v;
}

double Barrier::scaled_value(const Vec& x, double omega) const {
    auto& p = std::get<SideBarrierLowP>(params_);
    if (p.degenerate) return std::log(p.M + 2 * p.eps) / p.lambda_scale;
    const double d = std::max(side_depth(x, omega), 0.0);
    return std::log(p.M_hat + 2 * p.eps_hat) - d;
}

Piece Barrier::classify(const SpaceTimePoint& pt) const {
    if (auto* p = std::get_if<InitialBarrierParams>(&params_)) {
        if (p->degenerate) return Piece::exterior;
        double r;
        unit_from(pt.x, p->y, r);
        return r <= p->delta ? Piece::plus_region : Piece::exterior;
    }
    if (family_ == BarrierFamily::side_lowp && kind_ == BarrierKind::super)
        return scaled_classify(pt.x, scaled_time(pt.t));
    double ridge;
    const double d = side_depth(pt.x, pt.t, &ridge);
    if (d <= 0.0) return Piece::exterior;
    const double s = anchor().t;
    return pt.t >= s ? Piece::plus_region : Piece::minus_region;
}

Piece Barrier::scaled_classify(const Vec& x, double omega) const {
    auto& p = std::get<SideBarrierLowP>(params_);
    const double d = side_depth(x, omega);
    if (d <= 0.0) return Piece::exterior;
    return omega >= scaled_time(p.s) ? Piece::plus_region : Piece::minus_region;
}

Jet Barrier::jet(const SpaceTimePoint& pt) const {
    const int n = e_.n;
    if (auto* p = std::get_if<InitialBarrierParams>(&params_)) {
        if (p->degenerate) return Jet(0.0, Vec(n, 0.0), Matrix(n));
        double r;
        Vec u = unit_from(pt.x, p->y, r);
        const double sgn = (kind_ == BarrierKind::sub) ? -1.0 : 1.0;
        const double expf = std::exp(sgn * p->ell * pt.t);
        const double guard = 1e-6 * p->delta;
        if (std::abs(r - p->delta) <= guard)
            throw OnRidge("initial barrier: within guard band of the region seam");
        if (r > p->delta) {
            const double base = base_value(pt.t);
            return Jet(sgn * p->ell * base, Vec(n, 0.0), Matrix(n));
        }
        const double coef = (kind_ == BarrierKind::sub) ? -(p->h_anchor - p->m)
                                                        : (p->M - p->h_anchor);
        const double phi = value(pt) / expf;
        Vec grad = (expf * coef * 2.0 * r / (p->delta * p->delta)) * u;
        Matrix hess = (expf * coef * 2.0 / (p->delta * p->delta)) * Matrix::identity(n);
        return Jet(sgn * p->ell * phi * expf, std::move(grad), std::move(hess));
    }

    if (family_ == BarrierFamily::side_lowp && kind_ == BarrierKind::super) {
        auto& p = std::get<SideBarrierLowP>(params_);
        Jet sj = scaled_jet(pt.x, scaled_time(pt.t));
        const double lam = p.lambda_scale;
        Vec grad = lam * sj.gradient;
        Matrix hess = sj.hessian;
        hess *= lam;
        return Jet(std::pow(lam, e_.p - 1.0) * sj.time_slope, std::move(grad), std::move(hess));
    }

    double ridge;
    const double d = side_depth(pt.x, pt.t, &ridge);
    if (auto* p = std::get_if<SideBarrierHighP>(&params_)) {
        if (p->degenerate) return Jet(0.0, Vec(n, 0.0), Matrix(n));
        const double guard_d = 1e-6 * p->k * p->tau;
        const double guard_t = 1e-6 * p->tau;
        if (std::abs(d) <= guard_d)
            throw OnRidge("cusp barrier: within guard band of the region seam");
        if (d < 0.0) return Jet(0.0, Vec(n, 0.0), Matrix(n));
        if (ridge <= guard_t)
            throw OnRidge("cusp barrier: on the t = s ridge; use ridge_check");
        double r;
        Vec u = unit_from(pt.x, p->y, r);
        const double sgn = (kind_ == BarrierKind::sub) ? -1.0 : 1.0;
        // radial part sgn * c r^gamma
        const double g = p->gamma;
        Vec grad = (sgn * p->c * g * rpow(r, g - 1.0)) * u;
        Matrix hess = Matrix::radial(u, sgn * p->c * g * (g - 1.0) * rpow(r, g - 2.0),
                                     sgn * p->c * g * rpow(r, g - 2.0));
        // sub: R+ slope -k, R- slope +k; super mirrored (sgn carries the kind).
        const double future = (pt.t >= p->s) ? 1.0 : -1.0;
        const double a = sgn * future * p->k;
        return Jet(a, std::move(grad), std::move(hess));
    }

    auto& p = std::get<SideBarrierLowP>(params_); // sub
    if (p.degenerate) return Jet(0.0, Vec(n, 0.0), Matrix(n));
    const double guard_d = 1e-6 * p.k * p.tau;
    const double guard_t = 1e-6 * p.tau;
    if (std::abs(d) <= guard_d)
        throw OnRidge("shell barrier: within guard band of the region seam");
    if (d < 0.0) return Jet(0.0, Vec(n, 0.0), Matrix(n));
    if (ridge <= guard_t) throw OnRidge("shell barrier: on the t = s ridge; use ridge_check");
    double r;
    Vec u = unit_from(pt.x, p.z, r);
    const double g = p.gamma;
    // radial part + r^{-gamma}
    Vec grad = (-g * rpow(r, -g - 1.0)) * u;
    Matrix hess = Matrix::radial(u, g * (g + 1.0) * rpow(r, -g - 2.0), -g * rpow(r, -g - 2.0));
    const double future = (pt.t >= p.s) ? 1.0 : -1.0;
    return Jet(-future * p.k, std::move(grad), std::move(hess));
}

Jet Barrier::scaled_jet(const Vec& x, double omega) const {
    auto& p = std::get<SideBarrierLowP>(params_);
    const int n = e_.n;
    if (p.degenerate) return Jet(0.0, Vec(n, 0.0), Matrix(n));
    double ridge;
    const double d = side_depth(x, omega, &ridge);
    const double guard_d = 1e-6 * p.k * p.tau;
    const double guard_t = 1e-6 * p.tau;
    if (std::abs(d) <= guard_d)
        throw OnRidge("shell indent: within guard band of the region seam");
    if (d < 0.0) return Jet(0.0, Vec(n, 0.0), Matrix(n));
    if (ridge <= guard_t) throw OnRidge("shell indent: on the omega = s-hat ridge");
    double r;
    Vec u = unit_from(x, p.z, r);
    const double g = p.gamma;
    // radial part - c r^{-gamma}
    Vec grad = (p.c * g * rpow(r, -g - 1.0)) * u;
    Matrix hess =
        Matrix::radial(u, -p.c * g * (g + 1.0) * rpow(r, -g - 2.0), p.c * g * rpow(r, -g - 2.0));
    const double future = (omega >= scaled_time(p.s)) ? 1.0 : -1.0;
    return Jet(future * p.k, std::move(grad), std::move(hess));
}

nlohmann::json Barrier::to_json() const {
    nlohmann::json j;
    j["family"] = to_string(family_);
    j["kind"] = to_string(kind_);
    j["p"] = e_.p;
    j["n"] = e_.n;
    const SpaceTimePoint a = anchor();
    j["anchor"] = {{"y", a.x}, {"s", a.t}};
    nlohmann::json prm;
    if (auto* p = std::get_if<InitialBarrierParams>(&params_)) {
        prm = {{"eps", p->eps},         {"delta", p->delta},
               {"lambda", p->lambda},   {"ell", p->ell},
               {"tau", p->tau},         {"boundary_placement", p->boundary_placement},
               {"h_anchor", p->h_anchor}, {"m", p->m},
               {"M", p->M},             {"degenerate", p->degenerate}};
    } else if (auto* p = std::get_if<SideBarrierHighP>(&params_)) {
        prm = {{"eps", p->eps},   {"k", p->k},         {"tau", p->tau},
               {"gamma", p->gamma}, {"c", p->c},       {"delta", p->delta},
               {"mu", p->mu},     {"Lambda", p->Lambda}, {"h_anchor", p->h_anchor},
               {"m", p->m},       {"M", p->M},         {"degenerate", p->degenerate}};
    } else {
        auto& q = std::get<SideBarrierLowP>(params_);
        prm = {{"eps", q.eps},       {"z", q.z},
               {"rho", q.rho},       {"gamma", q.gamma},
               {"k", q.k},           {"tau", q.tau},
               {"delta", q.delta},   {"Lambda", q.Lambda},
               {"A", q.A},           {"lambda_scale", q.lambda_scale},
               {"alpha", q.alpha},   {"eps_hat", q.eps_hat},
               {"theta", q.theta},   {"c", q.c},
               {"L", q.L},           {"vartheta", q.vartheta},
               {"M_hat", q.M_hat},   {"h_hat", q.h_hat},
               {"h_anchor", q.h_anchor}, {"m", q.m},
               {"M", q.M},           {"degenerate", q.degenerate}};
    }
    j["params"] = std::move(prm);
    return j;
}

// ---------------------------------------------------------------------------
// Problem-driven constructors
// ---------------------------------------------------------------------------

namespace {

void check_side_anchor(const CylinderProblem& prob, const Vec& y, double s) {
    if (!prob.domain().on_boundary(y, prob.boundary_tolerance()))
        throw DomainViolation("side barrier: anchor y must lie on the spatial boundary");
    if (!(s > 0.0 && s < prob.horizon()))
        throw DomainViolation("side barrier: anchor time must satisfy 0 < s < T");
}

Barrier make_initial(const CylinderProblem& prob, const Vec& y, double eps, BarrierKind kind) {
    const auto& dom = prob.domain();
    const double sd = dom.signed_distance(y);
    if (sd > prob.boundary_tolerance())
        throw DomainViolation("initial barrier: anchor must lie in the closed domain");
    require_margin(eps, prob.m());
    const double h_y0 = prob.h_initial(y);
    if (kind == BarrierKind::sub && h_y0 < prob.m() - 1e-9 * std::max(1.0, prob.m()))
        throw InvalidInput("initial barrier: datum at anchor below the sampled infimum");
    if (kind == BarrierKind::super && h_y0 > prob.M() + 1e-9 * std::max(1.0, prob.M()))
        throw InvalidInput("initial barrier: datum at anchor above the sampled supremum");

    const bool boundary = dom.on_boundary(y, prob.boundary_tolerance());
    auto [delta0, tau0] = prob.local_modulus(y, 0.0, eps);
    double delta = delta0;
    if (!boundary) delta = std::min(delta0, -sd);
    InitialBarrierParams prm = derive_initial(kind, prob.exponents(), prob.m(), prob.M(), h_y0,
                                              eps, y, delta, tau0, boundary);
    return Barrier(kind, BarrierFamily::initial, prob.exponents(), prob.horizon(),
                   std::move(prm));
}

} // namespace

Barrier make_initial_sub(const CylinderProblem& prob, const Vec& y, double eps) {
    return make_initial(prob, y, eps, BarrierKind::sub);
}

Barrier make_initial_super(const CylinderProblem& prob, const Vec& y, double eps) {
    return make_initial(prob, y, eps, BarrierKind::super);
}

Barrier make_side_sub_highp(const CylinderProblem& prob, const Vec& y, double s, double eps) {
    check_side_anchor(prob, y, s);
    auto [delta0, tau0] = prob.local_modulus(y, s, eps);
    SideBarrierHighP prm = derive_side_highp(BarrierKind::sub, prob.exponents(), prob.m(),
                                             prob.M(), prob.h_side(y, s), eps, y, s, delta0,
                                             tau0);
    return Barrier(BarrierKind::sub, BarrierFamily::side_highp, prob.exponents(),
                   prob.horizon(), std::move(prm));
}

Barrier make_side_super_highp(const CylinderProblem& prob, const Vec& y, double s, double eps) {
    check_side_anchor(prob, y, s);
    auto [delta0, tau0] = prob.local_modulus(y, s, eps);
    SideBarrierHighP prm = derive_side_highp(BarrierKind::super, prob.exponents(), prob.m(),
                                             prob.M(), prob.h_side(y, s), eps, y, s, delta0,
                                             tau0);
    return Barrier(BarrierKind::super, BarrierFamily::side_highp, prob.exponents(),
                   prob.horizon(), std::move(prm));
}

Barrier make_side_sub_lowp(const CylinderProblem& prob, const Vec& y, double s, double eps) {
    check_side_anchor(prob, y, s);
    if (!prob.domain().outer_ball_radius())
        throw UnsupportedDomain("side barrier (p <= n): domain lacks outer-ball support");
    auto [delta0, tau0] = prob.local_modulus(y, s, eps);
    Vec normal = prob.domain().outward_normal(y);
    SideBarrierLowP prm = derive_side_lowp_sub(prob.exponents(), prob.m(), prob.M(),
                                               prob.h_side(y, s), eps, y, s, normal,
                                               *prob.domain().outer_ball_radius(), delta0, tau0);
    if (!prm.degenerate) prm.z = prob.domain().outer_ball(y, prm.rho);
    return Barrier(BarrierKind::sub, BarrierFamily::side_lowp, prob.exponents(), prob.horizon(),
                   std::move(prm));
}

Barrier make_side_super_lowp(const CylinderProblem& prob, const Vec& y, double s, double eps) {
    check_side_anchor(prob, y, s);
    if (!prob.domain().outer_ball_radius())
        throw UnsupportedDomain("side barrier (p <= n): domain lacks outer-ball support");
    require_margin(eps, prob.m());
    const Exponents& e = prob.exponents();
    LowPSuperScaling sc = derive_lowp_super_scaling(e, prob.M(), prob.h_side(y, s), eps);

    double delta0 = 0.0, tau0_scaled = 0.0;
    if (sc.alpha > kDegenerateTol) {
        const double il = 1.0 / sc.lambda;
        auto [d0, t0] = prob.local_modulus(y, s, sc.eps_hat,
                                           [il](double v) { return std::pow(v, il); });
        delta0 = d0;
        tau0_scaled = std::pow(sc.lambda, e.p - 2.0) * t0;
    }
    SideBarrierLowP prm =
        derive_side_lowp_super(e, prob.m(), prob.M(), prob.h_side(y, s), eps, y, s, sc,
                               *prob.domain().outer_ball_radius(), delta0, tau0_scaled);
    if (!prm.degenerate) prm.z = prob.domain().outer_ball(y, prm.rho);
    return Barrier(BarrierKind::super, BarrierFamily::side_lowp, prob.exponents(),
                   prob.horizon(), std::move(prm));
}

Barrier make_side_sub(const CylinderProblem& prob, const Vec& y, double s, double eps) {
    return prob.exponents().p > prob.exponents().n ? make_side_sub_highp(prob, y, s, eps)
                                                   : make_side_sub_lowp(prob, y, s, eps);
}

Barrier make_side_super(const CylinderProblem& prob, const Vec& y, double s, double eps) {
    return prob.exponents().p > prob.exponents().n ? make_side_super_highp(prob, y, s, eps)
                                                   : make_side_super_lowp(prob, y, s, eps);
}

} // namespace trudinger
