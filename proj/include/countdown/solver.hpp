#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "countdown/model.hpp"

namespace countdown {

// Portable resource limits for one search. Frontier counts deduplication
// memory: the visited set for DFS, closed plus open for GBFS.
struct Budget {
    std::uint64_t max_expansions = 10'000'000;
    std::uint64_t max_millis = 86'400'000;
    std::uint64_t max_frontier = 50'000'000;
};

enum class SolveStatus : std::uint8_t { Solved, ExhaustedUnsolvable, BudgetExceeded };

std::string_view solve_status_tag(SolveStatus status);
std::optional<SolveStatus> solve_status_from_tag(std::string_view tag);

struct SolveStats {
    std::uint64_t expansions = 0;
    std::uint64_t generated = 0;
    std::uint64_t peak_frontier = 0;
    double elapsed_millis = 0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::BudgetExceeded;
    std::optional<std::vector<Step>> solution;  // present iff Solved
    SolveStats stats;
};

// Depth-first search in canonical action order with global duplicate
// detection; deterministic, so a Solved instance yields the same solution
// under any sufficient budget. ExhaustedUnsolvable is only reported when the
// whole reachable space fit within budget.
SolveOutcome dfs_solve(const Instance& instance, const Budget& budget = {});

using Heuristic = std::function<double(const NumberState&, const Rational& target)>;

// Remaining step count plus a distance term in [0, 1): the closest value's
// gap d to the target, squashed as d / (1 + d). Exactly 0 on goal states.
double default_heuristic(const NumberState& state, const Rational& target);

// Greedy best-first search: ascending heuristic, ties by insertion order,
// duplicate states expanded once.
SolveOutcome gbfs_solve(const Instance& instance, const Heuristic& heuristic,
                        const Budget& budget = {});
SolveOutcome gbfs_solve(const Instance& instance, const Budget& budget = {});

}  // namespace countdown
