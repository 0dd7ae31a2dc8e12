// Spatial domains with analytic geometry: box, ball, annulus, and a rounded
// box (a box dilated by a ball, which is what makes every boundary point admit
// exterior tangent balls). Provides inside tests, signed distance, nearest
// boundary points with outward normals, outer-ball centers, and quasi-uniform
// samplers for the interior and the boundary.

#ifndef TRUDINGER_DOMAIN_HPP
#define TRUDINGER_DOMAIN_HPP

#include <functional>
#include <optional>
#include <string>

#include "trudinger/linalg.hpp"
#include "trudinger/sampling.hpp"

namespace trudinger {

enum class DomainKind { box, ball, annulus, rounded_box };

struct BoundaryPoint {
    Vec point;
    Vec normal; // outward unit normal (a valid supporting normal at corners)
};

class SpatialDomain {
public:
    // Axis-aligned box (lo, hi).
    static SpatialDomain make_box(Vec lo, Vec hi,
                                  std::optional<double> outer_ball_radius = std::nullopt);
    // Open ball of given center/radius.
    static SpatialDomain make_ball(Vec center, double radius,
                                   std::optional<double> outer_ball_radius = std::nullopt);
    // Open annulus r_inner < |x - center| < r_outer.
    static SpatialDomain make_annulus(Vec center, double r_inner, double r_outer,
                                      std::optional<double> outer_ball_radius = std::nullopt);
    // Rounded box: points within `round_radius` of the core box (lo, hi).
    static SpatialDomain make_rounded_box(Vec lo, Vec hi, double round_radius,
                                          std::optional<double> outer_ball_radius = std::nullopt);

    DomainKind kind() const { return kind_; }
    int dim() const { return dim_; }
    std::optional<double> outer_ball_radius() const { return rho0_; }

    // Signed distance to the boundary, negative inside. Exact for all kinds.
    double signed_distance(const Vec& x) const;
    bool contains(const Vec& x) const { return signed_distance(x) < 0.0; }
    bool on_boundary(const Vec& x, double tol) const {
        return std::abs(signed_distance(x)) <= tol;
    }

    // Nearest point of the boundary together with the outward normal there.
    BoundaryPoint nearest_boundary(const Vec& x) const;

    // Outward unit normal at a boundary point; at box corners a diagonal
    // supporting normal is returned.
    Vec outward_normal(const Vec& y) const;

    void bounding_box(Vec& lo, Vec& hi) const;
    double diameter() const;

    // Center z of an exterior tangent ball of radius rho at boundary point y:
    // |z - y| = rho and B_rho(z) does not meet the domain.
    Vec outer_ball(const Vec& y, double rho) const;

    // Quasi-uniform interior sample (Halton + rejection into the domain).
    Vec sample_interior(HaltonSeq& seq) const;
    // Quasi-uniform boundary sample; exact surface parameterization for
    // box/ball/annulus, nearest-point projection for the rounded box.
    Vec sample_boundary(std::uint64_t i) const;

    // Corner/extreme points worth including in any extremum scan.
    std::vector<Vec> corner_points() const;

private:
    DomainKind kind_ = DomainKind::box;
    int dim_ = 0;
    Vec lo_, hi_;       // box / rounded-box core
    Vec center_;        // ball / annulus
    double r_ = 0.0;    // ball radius / annulus outer radius / rounding radius
    double r_in_ = 0.0; // annulus inner radius
    std::optional<double> rho0_;

    double box_sdf(const Vec& x, const Vec& lo, const Vec& hi) const;
    BoundaryPoint box_nearest(const Vec& x, const Vec& lo, const Vec& hi) const;
};

} // namespace trudinger

#endif
