#pragma once

#include <cmath>
#include <cstdint>

namespace msep {

// Seedable 64-bit generator (splitmix64 steps) with cheaply derived
// substreams, so per-voxel / per-spline generation is deterministic and
// order independent across platforms. Normal variates use the polar
// method; std::normal_distribution is implementation defined and would
// break bit-exact reproducibility.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // uniform in [0, 1), 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // uniform integer in [0, n); n > 0. Modulo bias is < 2^-50 for any n
    // used here and is accepted for the sake of a fixed consumption rate.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // standard normal pair via the polar method (Marsaglia)
    void normal_pair(double& z1, double& z2) {
        double x, y, s;
        do {
            x = uniform(-1.0, 1.0);
            y = uniform(-1.0, 1.0);
            s = x * x + y * y;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        z1 = x * f;
        z2 = y * f;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace msep
