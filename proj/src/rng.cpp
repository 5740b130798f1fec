#include "countdown/rng.hpp"

namespace countdown {

std::uint64_t Rng::below(std::uint64_t bound) {
    // Lemire-style threshold rejection: discard the low band that would
    // make some residues one draw more likely than others.
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = gen_();
        if (x >= threshold) return x % bound;
    }
}

std::uint64_t Rng::range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
}

double Rng::unit() {
    // 53 random bits scaled into [0, 1).
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    // splitmix64 finalizer over a simple combination of the coordinates.
    std::uint64_t z = seed;
    z += 0x9e3779b97f4a7c15ULL * (a + 1);
    z += 0xbf58476d1ce4e5b9ULL * (b + 1);
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

}  // namespace countdown
