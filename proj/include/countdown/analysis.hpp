#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "countdown/model.hpp"
#include "countdown/rational.hpp"

namespace countdown {

// Upper bounds on the search space of an instance with n numbers: layer j
// (states of size n+1-j) holds at most L_j states, and the whole space at
// most their sum.
struct BoundReport {
    std::size_t n = 0;
    std::vector<BigInt> layer_bounds;  // L_1 .. L_n
    BigInt total;
};

// b_k = 3k(k-1), the most actions any state of size k can offer.
std::uint64_t branching_bound(std::uint64_t k);

// L_j as the product over i in [n+2-j, n] of 3i(i-1), and as the closed
// factorial form 3^(j-1) n!(n-1)! / ((n-j)!(n+1-j)!). The two agree; both
// are exposed so that agreement stays testable.
BigInt layer_bound_product(std::size_t n, std::size_t j);
BigInt layer_bound_factorial(std::size_t n, std::size_t j);
BigInt layer_bound(std::size_t n, std::size_t j);

BoundReport state_space_bound(std::size_t n);

// log10 of a positive big integer, good to ~15 significant digits.
double log10_bigint(const BigInt& value);

struct ReachableSet {
    std::vector<Rational> values;  // sorted ascending
    bool truncated = false;
};

// The over-approximation of values obtainable in `steps` rounds of pairwise
// closure over the inputs (self-pairs included, Sub kept non-negative, Div
// kept zero-free). cap = 0 means unbounded; otherwise growth stops at cap
// elements and the result is flagged truncated.
ReachableSet reachable_overapprox(const std::vector<Rational>& numbers,
                                  std::size_t steps, std::size_t cap = 0);

struct StatsRow {
    std::string generator;
    std::size_t size = 0;
    std::size_t instances = 0;
    double min = 0, median = 0, mean = 0, max = 0;
};

// Per (generator, size) summary of solution counts, keyed by instance id.
// Instances without a count entry are skipped. Rows sorted by
// (generator, size).
std::vector<StatsRow> dataset_stats(
    const std::vector<Instance>& instances,
    const std::unordered_map<std::string, double>& counts);

std::string stats_to_csv(const std::vector<StatsRow>& rows);

}  // namespace countdown
