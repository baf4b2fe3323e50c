#ifndef POLYFP_RNG_HPP
#define POLYFP_RNG_HPP

#include <cmath>
#include <cstdint>

#include "polyfp/complex.hpp"

namespace polyfp {

// Counter-based splitting: child streams depend only on (seed, counter), so
// results are reproducible at any parallelism level.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ull * (counter + 1);
    s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ull;
    s = (s ^ (s >> 27)) * 0x94d049bb133111ebull;
    return s ^ (s >> 31);
}

// SplitMix64. Uniform doubles are built directly from the top 53 bits so the
// stream is identical across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Area-uniform point with |z| < radius.
    Cplx disk(double radius = 1.0) {
        double r = radius * std::sqrt(uniform());
        double t = 6.283185307179586476925287 * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

    // Re and Im each uniform in [-half, half].
    Cplx box(double half) { return {uniform(-half, half), uniform(-half, half)}; }

    // Area-uniform point with r_min <= |z| <= r_max.
    Cplx annulus(double r_min, double r_max) {
        double r = std::sqrt(uniform(r_min * r_min, r_max * r_max));
        double t = 6.283185307179586476925287 * uniform();
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    std::uint64_t state_;
};

} // namespace polyfp

#endif
