// Masked Cartesian lattice over a spatial domain: interior nodes carry the
// unknowns, boundary nodes carry Dirichlet values pulled from their nearest
// boundary projection, exterior nodes are dead. Boxes can be aligned exactly
// (nodes on the faces); other domains get a lattice offset so nodes straddle
// the boundary and the projection path is exercised.

#ifndef TRUDINGER_GRID_HPP
#define TRUDINGER_GRID_HPP

#include <memory>

#include "trudinger/domain.hpp"

namespace trudinger {

enum class NodeClass : std::uint8_t { exterior = 0, boundary = 1, interior = 2 };

struct GridOptions {
    bool align_box = true;      // align lattice to box faces when possible
    double lattice_offset = 0.5; // fraction of h to shift unaligned lattices
};

class Grid {
public:
    struct BoundaryInfo {
        long node;
        Vec projection; // nearest point of the spatial boundary
        double distance;
    };

    static std::shared_ptr<const Grid> make(SpatialDomain domain, double target_h,
                                            GridOptions opts = {});

    const SpatialDomain& domain() const { return domain_; }
    int dim() const { return domain_.dim(); }
    const Vec& spacing() const { return h_; }
    double min_spacing() const;
    const std::vector<int>& shape() const { return dims_; }

    long node_count() const { return static_cast<long>(mask_.size()); }
    NodeClass node_class(long id) const { return mask_[static_cast<std::size_t>(id)]; }
    Vec node_pos(long id) const;

    const std::vector<long>& interior_nodes() const { return interior_; }
    const std::vector<BoundaryInfo>& boundary_nodes() const { return boundary_; }

    // Axis neighbor (dir = +1/-1); all neighbors of interior nodes exist.
    long neighbor(long id, int axis, int dir) const {
        return id + dir * strides_[static_cast<std::size_t>(axis)];
    }
    long diagonal_neighbor(long id, int axis_a, int dir_a, int axis_b, int dir_b) const {
        return id + dir_a * strides_[static_cast<std::size_t>(axis_a)] +
               dir_b * strides_[static_cast<std::size_t>(axis_b)];
    }

    // Largest run of interior nodes available along each axis.
    std::vector<int> interior_extent() const;

private:
    SpatialDomain domain_;
    Vec origin_;
    Vec h_;
    std::vector<int> dims_;
    std::vector<long> strides_;
    std::vector<NodeClass> mask_;
    std::vector<long> interior_;
    std::vector<BoundaryInfo> boundary_;

    explicit Grid(SpatialDomain d) : domain_(std::move(d)) {}
};

// Nodal values of eta = log u at one time level.
struct GridField {
    std::shared_ptr<const Grid> grid;
    std::vector<double> eta;
    double time = 0.0;

    double u(long id) const { return std::exp(eta[static_cast<std::size_t>(id)]); }
};

} // namespace trudinger

#endif
