#pragma once

#include <cstdint>

#include "countdown/model.hpp"
#include "countdown/rational.hpp"
#include "countdown/solver.hpp"

namespace countdown {

struct CountResult {
    BigInt count;          // exact when complete, else a lower bound
    bool complete = true;
    std::uint64_t expansions = 0;
    double elapsed_millis = 0;
};

// Number of distinct canonical-action sequences from the input multiset to
// {target}. The traversal is a plain tree walk: a state reached along two
// different paths is counted in both subtrees, which is what makes the count
// a path count rather than a reachability count. Budget hits set
// complete=false and leave `count` as the number of solutions found so far.
// max_frontier is not meaningful for a tree walk and is ignored.
CountResult count_solutions(const Instance& instance, const Budget& budget = {});

}  // namespace countdown
