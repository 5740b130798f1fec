#pragma once

#include <cstdint>
#include <vector>

#include "countdown/model.hpp"
#include "countdown/rational.hpp"
#include "countdown/rng.hpp"

namespace countdown {

struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool contains(const BigInt& v) const { return v >= lo && v <= hi; }
};

// Knobs shared by the three generation methods. Ranges follow common
// Countdown conventions and every method stays deterministic in `seed`.
struct GenConfig {
    std::size_t n = 4;
    Range input_range{1, 99};
    Range target_range{10, 999};
    std::uint64_t rollouts = 1000;    // forward rollouts per CD attempt
    std::uint64_t retry_cap = 1000;   // bounded retries before giving up
    std::uint64_t seed = 0;
    std::uint64_t sos_node_budget = 1'000'000;  // backward states per attempt
    std::size_t sos_frontier_cap = 128;         // kept per backward level
};

// Largest size the backward generator accepts.
inline constexpr std::size_t kSosSizeCap = 9;

std::vector<std::uint64_t> draw_numbers(Rng& rng, std::size_t n, Range input_range);

struct Rollout {
    BigInt target;
    std::vector<Step> steps;
};

// Random walk to a single number using only integer-preserving actions
// (division only when exact). Add is always applicable, so the walk always
// terminates with a natural number.
Rollout integer_rollout(const std::vector<std::uint64_t>& numbers, Rng& rng);

// Countdown-style: draw numbers, run many rollouts, pick the least frequent
// in-range terminal (ties to the smallest value) as the target.
Instance generate_cd(const GenConfig& config);

// Fold-style: combine the drawn numbers in order under random
// integer-preserving operators until the result lands in the target range.
Instance generate_rg(const GenConfig& config);

// Backward-split style: split the target backwards, breadth-first with a
// sampled frontier, until an n-number multiset inside the input range
// remains; the reversed split chain is the witness.
Instance generate_sos(const GenConfig& config);

Instance generate_one(GenMethod method, const GenConfig& config);

// count instances per size. Every instance runs on its own rng stream
// derived from (seed, size, index), so the dataset bytes never depend on
// generation order. Ids follow "<method>-n<size>-<index>".
std::vector<Instance> generate_dataset(GenMethod method, const GenConfig& config,
                                       std::size_t count,
                                       const std::vector<std::size_t>& sizes);

}  // namespace countdown
