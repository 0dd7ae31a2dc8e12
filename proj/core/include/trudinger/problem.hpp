// The initial/boundary-value problem on a space-time cylinder: domain, horizon,
// exponents and the positive boundary datum h (f on the initial slice, g on the
// lateral boundary), together with the geometric and continuity queries the
// barrier constructions need.

#ifndef TRUDINGER_PROBLEM_HPP
#define TRUDINGER_PROBLEM_HPP

#include <functional>
#include <memory>
#include <string>

#include "trudinger/calculus.hpp"
#include "trudinger/domain.hpp"
#include "trudinger/expression.hpp"

namespace trudinger {

struct SpaceTimePoint {
    Vec x;
    double t = 0.0;
};

class BoundaryDatum {
public:
    using SpaceFn = std::function<double(const Vec&)>;
    using SpaceTimeFn = std::function<double(const Vec&, double)>;

    static BoundaryDatum from_functions(SpaceFn f, SpaceTimeFn g);
    static BoundaryDatum from_expressions(const std::string& f_text, const std::string& g_text,
                                          int dim);
    static BoundaryDatum constant(double c);

    double f(const Vec& x) const { return f_(x); }
    double g(const Vec& x, double t) const { return g_(x, t); }

    const std::string& f_source() const { return f_src_; }
    const std::string& g_source() const { return g_src_; }

private:
    SpaceFn f_;
    SpaceTimeFn g_;
    std::string f_src_, g_src_;
};

struct Extrema {
    double m = 0.0;     // sampled infimum of h over P_T
    double M = 0.0;     // sampled supremum
    double slack = 0.0; // estimated sampling slack (Lipschitz estimate x spacing)
};

class CylinderProblem {
public:
    CylinderProblem(SpatialDomain domain, double horizon, Exponents exponents,
                    BoundaryDatum datum, int extrema_samples = 100000);

    const SpatialDomain& domain() const { return domain_; }
    double horizon() const { return T_; }
    const Exponents& exponents() const { return e_; }
    const BoundaryDatum& datum() const { return datum_; }

    // h on the parabolic boundary; DomainViolation off it.
    double eval_h(const SpaceTimePoint& pt) const;

    // Cached construction-time scan of (inf h, sup h) over P_T.
    const Extrema& extrema() const { return extrema_; }
    double m() const { return extrema_.m; }
    double M() const { return extrema_.M; }

    // Fresh scan with a chosen sample count.
    Extrema extrema_h(int samples) const;

    // Largest (delta0, tau0) on a dyadic ladder such that h stays within eps of
    // h(y,s) on the sampled portion of D_{delta0, 2 tau0}(y,s) on P_T. An
    // optional value transform is applied to h before the comparison (the
    // scaled construction needs h^{1/lambda}).
    std::pair<double, double> local_modulus(
        const Vec& y, double s, double eps,
        const std::function<double(double)>& transform = {}) const;

    // h restricted to P_T as a function: f on {t = 0}, g on the side.
    double h_side(const Vec& x, double t) const { return datum_.g(x, t); }
    double h_initial(const Vec& x) const { return datum_.f(x); }

    double boundary_tolerance() const { return 1e-9 * std::max(1.0, domain_.diameter()); }

private:
    SpatialDomain domain_;
    double T_;
    Exponents e_;
    BoundaryDatum datum_;
    Extrema extrema_;

    bool oscillation_ok(const Vec& y, double s, double center, double delta, double tau,
                        double eps, const std::function<double(double)>& transform) const;
};

} // namespace trudinger

#endif
