#include "trudinger/problem.hpp"

#include <algorithm>
#include <cmath>

namespace trudinger {

BoundaryDatum BoundaryDatum::from_functions(SpaceFn f, SpaceTimeFn g) {
    BoundaryDatum d;
    d.f_ = std::move(f);
    d.g_ = std::move(g);
    return d;
}

BoundaryDatum BoundaryDatum::from_expressions(const std::string& f_text,
                                              const std::string& g_text, int dim) {
    auto fe = std::make_shared<Expression>(parse_expression(f_text, dim));
    auto ge = std::make_shared<Expression>(parse_expression(g_text, dim));
    BoundaryDatum d;
    d.f_ = [fe](const Vec& x) { return fe->eval(x, 0.0); };
    d.g_ = [ge](const Vec& x, double t) { return ge->eval(x, t); };
    d.f_src_ = f_text;
    d.g_src_ = g_text;
    return d;
}

BoundaryDatum BoundaryDatum::constant(double c) {
    BoundaryDatum d;
    d.f_ = [c](const Vec&) { return c; };
    d.g_ = [c](const Vec&, double) { return c; };
    d.f_src_ = d.g_src_ = std::to_string(c);
    return d;
}

CylinderProblem::CylinderProblem(SpatialDomain domain, double horizon, Exponents exponents,
                                 BoundaryDatum datum, int extrema_samples)
    : domain_(std::move(domain)), T_(horizon), e_(exponents), datum_(std::move(datum)) {
    if (!(T_ > 0.0)) throw InvalidInput("CylinderProblem: horizon T must be > 0");
    extrema_ = extrema_h(extrema_samples);

    // Corner compatibility f = g(.,0) on the sampled boundary.
    for (std::uint64_t i = 0; i < 64; ++i) {
        Vec x = domain_.sample_boundary(i);
        const double fv = datum_.f(x);
        const double gv = datum_.g(x, 0.0);
        if (std::abs(fv - gv) > 1e-9 * std::max(1.0, std::abs(fv)))
            throw InvalidInput("CylinderProblem: datum incompatible at the corner (f != g(.,0))");
    }
}

double CylinderProblem::eval_h(const SpaceTimePoint& pt) const {
    const double tol = boundary_tolerance();
    const double ttol = 1e-12 * std::max(1.0, T_);
    double v;
    if (std::abs(pt.t) <= ttol && domain_.signed_distance(pt.x) <= tol) {
        v = datum_.f(pt.x);
    } else if (domain_.on_boundary(pt.x, tol) && pt.t >= 0.0 && pt.t < T_) {
        v = datum_.g(pt.x, pt.t);
    } else {
        throw DomainViolation("eval_h: point is not on the parabolic boundary");
    }
    if (!(v > 0.0)) throw PositivityViolation("eval_h: datum must be positive on P_T");
    return v;
}

Extrema CylinderProblem::extrema_h(int samples) const {
    if (samples < 16) samples = 16;
    const int n = domain_.dim();
    const double t_hi = T_ * (1.0 - 1e-12);

    double lo = 1e300, hi = -1e300;
    double lipschitz = 0.0;

    Vec prev_x;
    double prev_t = 0.0, prev_v = 0.0;
    bool have_prev = false;
    auto visit = [&](const Vec& x, double t, double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        if (have_prev) {
            const double d = dist(x, prev_x) + std::abs(t - prev_t);
            if (d > 1e-12) lipschitz = std::max(lipschitz, std::abs(v - prev_v) / d);
        }
        prev_x = x;
        prev_t = t;
        prev_v = v;
        have_prev = true;
    };

    // Initial slice.
    const int n_init = samples / 2;
    HaltonSeq seq(n);
    for (int i = 0; i < n_init; ++i) {
        Vec x = domain_.sample_interior(seq);
        visit(x, 0.0, datum_.f(x));
    }
    // Lateral boundary.
    const int n_side = samples - n_init;
    const int per_time = std::max(1, static_cast<int>(std::sqrt(double(n_side))));
    const int n_space = std::max(1, n_side / per_time);
    for (int i = 0; i < n_space; ++i) {
        Vec x = domain_.sample_boundary(static_cast<std::uint64_t>(i));
        for (int j = 0; j < per_time; ++j) {
            const double t = (per_time == 1) ? 0.0 : t_hi * j / (per_time - 1);
            visit(x, t, datum_.g(x, t));
        }
    }
    // Extreme geometric points at a few times.
    for (const Vec& x : domain_.corner_points()) {
        for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0 - 1e-12}) visit(x, frac * T_, datum_.g(x, frac * T_));
    }

    if (!(lo > 0.0)) throw PositivityViolation("extrema_h: sampled infimum of h is not positive");

    Extrema ex;
    ex.m = lo;
    ex.M = hi;
    const double spacing =
        domain_.diameter() * std::pow(1.0 / std::max(1, samples), 1.0 / std::max(1, n));
    ex.slack = lipschitz * spacing;
    return ex;
}

bool CylinderProblem::oscillation_ok(const Vec& y, double s, double center, double delta,
                                     double tau, double eps,
                                     const std::function<double(double)>& transform) const {
    auto tr = [&](double v) { return transform ? transform(v) : v; };
    const double t_lo = std::max(0.0, s - tau);
    const double t_hi = std::min(T_ * (1.0 - 1e-12), s + tau);
    const int n = domain_.dim();
    const int n_dirs = 128;
    const int n_times = 9;

    auto in_range = [&](double v) { return std::abs(tr(v) - center) <= eps; };

    // Lateral part: project quasi-uniform ball points onto the boundary.
    for (int i = 0; i < n_dirs; ++i) {
        const double u1 = halton(static_cast<std::uint64_t>(i), 2);
        const double u2 = halton(static_cast<std::uint64_t>(i), 3);
        const double u3 = halton(static_cast<std::uint64_t>(i), 5);
        Vec dir = sphere_direction(n, u1, u2);
        Vec probe = y + (delta * u3) * dir;
        Vec x = domain_.nearest_boundary(probe).point;
        if (dist(x, y) > delta) continue;
        for (int j = 0; j < n_times; ++j) {
            const double t = t_lo + (t_hi - t_lo) * j / (n_times - 1);
            if (!in_range(datum_.g(x, t))) return false;
        }
    }

    // Initial part, present only if the window reaches t = 0.
    if (s - tau <= 0.0) {
        for (int i = 0; i < n_dirs; ++i) {
            const double u1 = halton(static_cast<std::uint64_t>(i), 2);
            const double u2 = halton(static_cast<std::uint64_t>(i), 3);
            const double u3 = halton(static_cast<std::uint64_t>(i), 5);
            Vec dir = sphere_direction(n, u1, u2);
            Vec x = y + (delta * std::pow(u3, 1.0 / n)) * dir;
            if (domain_.signed_distance(x) > 0.0) continue;
            if (!in_range(datum_.f(x))) return false;
        }
    }
    return true;
}

std::pair<double, double> CylinderProblem::local_modulus(
    const Vec& y, double s, double eps,
    const std::function<double(double)>& transform) const {
    if (!(eps > 0.0)) throw InvalidInput("local_modulus: eps must be > 0");
    const double delta_cap = 0.5 * domain_.diameter();
    const double tau_cap = (s > 0.0) ? 0.5 * std::min(s, T_ - s) : 0.5 * T_;

    double center_raw;
    if (s > 0.0 || domain_.on_boundary(y, boundary_tolerance()))
        center_raw = datum_.g(y, std::max(s, 0.0));
    else
        center_raw = datum_.f(y);
    const double center = transform ? transform(center_raw) : center_raw;

    for (int j = 0; j <= 40; ++j) {
        const double delta = delta_cap * std::pow(2.0, -j);
        const double tau = tau_cap * std::pow(2.0, -j);
        if (oscillation_ok(y, s, center, delta, tau, eps, transform)) return {delta, tau};
    }
    return {delta_cap * std::pow(2.0, -40), tau_cap * std::pow(2.0, -40)};
}

} // namespace trudinger
