#pragma once

#include <cstdint>
#include <random>

namespace countdown {

// Deterministic random source. mt19937_64 output is bit-exact across
// implementations, but std::uniform_int_distribution is not, so bounded
// draws use explicit rejection sampling. Every consumer of randomness in
// the library goes through this class so datasets reproduce byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, bound), bound >= 1. Unbiased via rejection.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [lo, hi], inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi);

    // Uniform in [0, 1).
    double unit();

private:
    std::mt19937_64 gen_;
};

// Derives an independent stream seed from a base seed and two coordinates.
// Used to give every instance of a dataset its own generator so output does
// not depend on generation order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

}  // namespace countdown
