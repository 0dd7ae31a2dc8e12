// Deterministic sampling utilities: Halton low-discrepancy sequences for
// quasi-uniform sweeps and a SplitMix64 generator for seeded random fixtures.

#ifndef TRUDINGER_SAMPLING_HPP
#define TRUDINGER_SAMPLING_HPP

#include <cmath>
#include <cstdint>

#include "trudinger/linalg.hpp"

namespace trudinger {

inline double halton(std::uint64_t i, int base) {
    double f = 1.0, r = 0.0;
    std::uint64_t k = i + 1; // skip the 0 sample
    while (k > 0) {
        f /= base;
        r += f * static_cast<double>(k % static_cast<std::uint64_t>(base));
        k /= static_cast<std::uint64_t>(base);
    }
    return r;
}

// Low-discrepancy point sequence in the unit cube [0,1)^dim.
class HaltonSeq {
public:
    explicit HaltonSeq(int dim, std::uint64_t start = 0) : dim_(dim), index_(start) {}

    Vec next() {
        static constexpr int primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};
        Vec u(static_cast<std::size_t>(dim_));
        for (int d = 0; d < dim_; ++d) u[static_cast<std::size_t>(d)] = halton(index_, primes[d % 8]);
        ++index_;
        return u;
    }

private:
    int dim_;
    std::uint64_t index_;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Seeded generator for random test fixtures; deterministic across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0xD1B54A32D192ED03ull) {}

    double uniform() { // in [0,1)
        return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal() {
        // Box-Muller; spends two uniforms per call.
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

private:
    std::uint64_t state_;
};

// Area-preserving map from (u1,u2) in [0,1)^2 to the unit sphere S^{n-1}, n <= 3.
inline Vec sphere_direction(int n, double u1, double u2) {
    if (n == 1) return Vec{u1 < 0.5 ? -1.0 : 1.0};
    if (n == 2) {
        const double th = 2.0 * M_PI * u1;
        return Vec{std::cos(th), std::sin(th)};
    }
    if (n == 3) {
        const double z = 1.0 - 2.0 * u1;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double th = 2.0 * M_PI * u2;
        return Vec{r * std::cos(th), r * std::sin(th), z};
    }
    throw InvalidInput("sphere_direction: only n <= 3 supported");
}

} // namespace trudinger

#endif
