// Small deterministic RNG (splitmix64) so test corpora and random Forman
// functions are reproducible across platforms and standard libraries.
#pragma once

#include <cstdint>

namespace vrmorse {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1; modulo bias is irrelevant at our sizes
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + int(below(std::uint64_t(hi - lo + 1)));
    }
};

}  // namespace vrmorse
