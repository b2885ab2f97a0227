#pragma once

#include <cstdint>

namespace simplectra {

// splitmix64: tiny, stateless-per-step, identical on every platform.
// Used for all randomized corpora so that reruns with equal seeds are
// byte-identical; the algorithm id is recorded in run manifests.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1): 53 random mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound). Modulo bias is < bound/2^64, irrelevant
    // at desk scale and fully deterministic.
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

inline constexpr const char* kRngAlgorithm = "splitmix64";

} // namespace simplectra
