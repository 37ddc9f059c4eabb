#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace uwlink {

/// Sub-seed derivation for independent random streams: one splitmix64 step
/// over master_seed + golden-ratio-weighted index. Monte Carlo blocks seeded
/// this way give identical results regardless of execution order.
inline std::uint64_t split_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t z = master_seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Gaussian/uniform source with a platform-independent stream: mt19937_64
/// for bits, explicit 53-bit mapping for uniforms, Box-Muller for normals.
/// std::normal_distribution is not pinned down by the standard, so the same
/// seed could produce different noise across toolchains; this class is.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Standard normal.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    bool bernoulli() { return (gen_() >> 63) != 0; }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace uwlink
