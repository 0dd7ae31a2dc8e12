#include "trudinger/grid.hpp"

#include <algorithm>
#include <cmath>

namespace trudinger {

std::shared_ptr<const Grid> Grid::make(SpatialDomain domain, double target_h, GridOptions opts) {
    if (!(target_h > 0.0)) throw InvalidInput("Grid: target spacing must be > 0");
    auto grid = std::shared_ptr<Grid>(new Grid(std::move(domain)));
    const int n = grid->domain_.dim();
    Vec lo, hi;
    grid->domain_.bounding_box(lo, hi);

    grid->h_.resize(static_cast<std::size_t>(n));
    grid->origin_.resize(static_cast<std::size_t>(n));
    grid->dims_.resize(static_cast<std::size_t>(n));

    const bool aligned = opts.align_box && grid->domain_.kind() == DomainKind::box;
    for (int k = 0; k < n; ++k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        const double extent = hi[ks] - lo[ks];
        if (aligned) {
            // Per-axis spacing snapped so nodes land exactly on the faces.
            const int cells = std::max(2, static_cast<int>(std::lround(extent / target_h)));
            grid->h_[ks] = extent / cells;
            grid->origin_[ks] = lo[ks];
            grid->dims_[ks] = cells + 1;
        } else {
            grid->h_[ks] = target_h;
            grid->origin_[ks] = lo[ks] - (1.0 + opts.lattice_offset) * target_h;
            grid->dims_[ks] =
                static_cast<int>(std::ceil((hi[ks] + target_h - grid->origin_[ks]) / target_h)) +
                1;
        }
    }

    grid->strides_.resize(static_cast<std::size_t>(n));
    long total = 1;
    for (int k = n - 1; k >= 0; --k) {
        grid->strides_[static_cast<std::size_t>(k)] = total;
        total *= grid->dims_[static_cast<std::size_t>(k)];
    }
    grid->mask_.assign(static_cast<std::size_t>(total), NodeClass::exterior);

    // Pass 1: inside test.
    std::vector<char> inside(static_cast<std::size_t>(total), 0);
    for (long id = 0; id < total; ++id) {
        const Vec x = grid->node_pos(id);
        if (grid->domain_.signed_distance(x) < 0.0) {
            inside[static_cast<std::size_t>(id)] = 1;
            grid->mask_[static_cast<std::size_t>(id)] = NodeClass::interior;
            grid->interior_.push_back(id);
        }
    }

    // Pass 2: any non-inside node in the full 3^n neighborhood of an inside
    // node becomes a boundary node (cross-derivative stencils reach corners).
    std::vector<int> delta(static_cast<std::size_t>(n), -1);
    for (long id : grid->interior_) {
        std::vector<int> idx(static_cast<std::size_t>(n));
        long rem = id;
        for (int k = 0; k < n; ++k) {
            idx[static_cast<std::size_t>(k)] =
                static_cast<int>(rem / grid->strides_[static_cast<std::size_t>(k)]);
            rem %= grid->strides_[static_cast<std::size_t>(k)];
        }
        std::fill(delta.begin(), delta.end(), -1);
        for (;;) {
            long nb = 0;
            bool valid = true;
            for (int k = 0; k < n; ++k) {
                const int j = idx[static_cast<std::size_t>(k)] + delta[static_cast<std::size_t>(k)];
                if (j < 0 || j >= grid->dims_[static_cast<std::size_t>(k)]) {
                    valid = false;
                    break;
                }
                nb += j * grid->strides_[static_cast<std::size_t>(k)];
            }
            if (valid && !inside[static_cast<std::size_t>(nb)])
                grid->mask_[static_cast<std::size_t>(nb)] = NodeClass::boundary;
            int k = 0;
            while (k < n && delta[static_cast<std::size_t>(k)] == 1) {
                delta[static_cast<std::size_t>(k)] = -1;
                ++k;
            }
            if (k == n) break;
            ++delta[static_cast<std::size_t>(k)];
        }
    }

    for (long id = 0; id < total; ++id) {
        if (grid->mask_[static_cast<std::size_t>(id)] != NodeClass::boundary) continue;
        const Vec x = grid->node_pos(id);
        BoundaryPoint bp = grid->domain_.nearest_boundary(x);
        grid->boundary_.push_back({id, bp.point, dist(x, bp.point)});
    }
    return grid;
}

Vec Grid::node_pos(long id) const {
    const int n = dim();
    Vec x(static_cast<std::size_t>(n));
    long rem = id;
    for (int k = 0; k < n; ++k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        const long j = rem / strides_[ks];
        rem %= strides_[ks];
        x[ks] = origin_[ks] + static_cast<double>(j) * h_[ks];
    }
    return x;
}

double Grid::min_spacing() const {
    return *std::min_element(h_.begin(), h_.end());
}

std::vector<int> Grid::interior_extent() const {
    const int n = dim();
    std::vector<int> lo(static_cast<std::size_t>(n), 1 << 30);
    std::vector<int> hi(static_cast<std::size_t>(n), -1);
    for (long id : interior_) {
        long rem = id;
        for (int k = 0; k < n; ++k) {
            const std::size_t ks = static_cast<std::size_t>(k);
            const int j = static_cast<int>(rem / strides_[ks]);
            rem %= strides_[ks];
            lo[ks] = std::min(lo[ks], j);
            hi[ks] = std::max(hi[ks], j);
        }
    }
    std::vector<int> extent(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        if (hi[ks] >= lo[ks]) extent[ks] = hi[ks] - lo[ks] + 1;
    }
    return extent;
}

} // namespace trudinger
