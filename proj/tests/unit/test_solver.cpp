#include <doctest.h>

#include <random>
#include <vector>

#include "countdown/model.hpp"
#include "countdown/solver.hpp"
#include "countdown/validator.hpp"
#include "reference.hpp"

using namespace countdown;

namespace {

Instance instance_of(std::vector<std::uint64_t> numbers, std::uint64_t target) {
    Instance inst;
    inst.id = "test";
    inst.numbers = std::move(numbers);
    inst.target = target;
    return inst;
}

}  // namespace

TEST_SUITE_BEGIN("solver");

TEST_CASE("dfs solves the classic {3,4,5,6} -> 24") {
    const Instance inst = instance_of({3, 4, 5, 6}, 24);
    const SolveOutcome out = dfs_solve(inst);
    REQUIRE(out.status == SolveStatus::Solved);
    REQUIRE(out.solution.has_value());
    CHECK(out.solution->size() == 3);
    CHECK(validate(inst, format_solution(*out.solution)).valid());
    CHECK(out.stats.expansions > 0);
    CHECK(out.stats.generated >= out.stats.expansions);
}

TEST_CASE("dfs proves {2,2} -> 5 unsolvable after one expansion") {
    const SolveOutcome out = dfs_solve(instance_of({2, 2}, 5));
    CHECK(out.status == SolveStatus::ExhaustedUnsolvable);
    CHECK_FALSE(out.solution.has_value());
    // the root expands to four single-number dead ends; nothing else to do
    CHECK(out.stats.expansions == 1);
    CHECK(out.stats.generated == 4);
}

TEST_CASE("a solved size-2 instance stops at the goal child") {
    const SolveOutcome out = dfs_solve(instance_of({2, 3}, 5));
    REQUIRE(out.status == SolveStatus::Solved);
    REQUIRE(out.solution.has_value());
    REQUIRE(out.solution->size() == 1);
    CHECK(format_step(out.solution->front()) == "2 + 3 = 5");
}

TEST_CASE("budget semantics") {
    const Instance hard = instance_of({2, 2}, 5);

    Budget zero;
    zero.max_expansions = 0;
    CHECK(dfs_solve(hard, zero).status == SolveStatus::BudgetExceeded);

    Budget one;
    one.max_expansions = 1;
    // one expansion is exactly enough to exhaust {2,2}
    CHECK(dfs_solve(hard, one).status == SolveStatus::ExhaustedUnsolvable);

    // a tight frontier cap trips on a bigger instance
    Budget tiny_frontier;
    tiny_frontier.max_frontier = 2;
    CHECK(dfs_solve(instance_of({1, 2, 3, 4, 5, 6}, 99999), tiny_frontier).status ==
          SolveStatus::BudgetExceeded);
}

TEST_CASE("dfs is deterministic") {
    const Instance inst = instance_of({7, 9, 13, 50}, 284);
    const SolveOutcome a = dfs_solve(inst);
    const SolveOutcome b = dfs_solve(inst);
    CHECK(a.status == b.status);
    CHECK(a.stats.expansions == b.stats.expansions);
    CHECK(a.stats.generated == b.stats.generated);
    CHECK(a.solution == b.solution);
}

TEST_CASE("dfs agrees with the reference search on random small instances") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> value(1, 10);
    std::uniform_int_distribution<std::uint64_t> target(1, 60);
    std::uniform_int_distribution<int> size(2, 4);

    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> numbers(size(rng));
        for (auto& v : numbers) v = value(rng);
        const Instance inst = instance_of(numbers, target(rng));

        const SolveOutcome got = dfs_solve(inst);
        refimpl::RefDfs ref;
        const refimpl::DfsResult want =
            ref.run(inst.initial_state(), inst.target_value());

        REQUIRE(got.status != SolveStatus::BudgetExceeded);
        CHECK((got.status == SolveStatus::Solved) == want.solved);
        CHECK(got.stats.expansions == want.expansions);
        CHECK(got.stats.generated == want.generated);
        CHECK(got.stats.peak_frontier == want.visited);
        if (want.solved) {
            REQUIRE(got.solution.has_value());
            CHECK(*got.solution == steps_from_actions(want.path));
        }
    }
}

TEST_CASE("dfs matches the reference on a handful of size-5 instances") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<std::uint64_t> value(1, 9);
    std::uniform_int_distribution<std::uint64_t> target(100, 400);

    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::uint64_t> numbers(5);
        for (auto& v : numbers) v = value(rng);
        const Instance inst = instance_of(numbers, target(rng));

        const SolveOutcome got = dfs_solve(inst);
        refimpl::RefDfs ref;
        const refimpl::DfsResult want =
            ref.run(inst.initial_state(), inst.target_value());

        CHECK((got.status == SolveStatus::Solved) == want.solved);
        CHECK(got.stats.expansions == want.expansions);
        if (want.solved) CHECK(*got.solution == steps_from_actions(want.path));
    }
}

TEST_CASE("default heuristic is zero exactly on goals") {
    const Rational target(24);
    CHECK(default_heuristic({Rational(24)}, target) == doctest::Approx(0.0));
    CHECK(default_heuristic({Rational(23)}, target) == doctest::Approx(0.5));
    CHECK(default_heuristic({}, target) == doctest::Approx(0.0));

    // more numbers left means a larger value even with the target on hand
    CHECK(default_heuristic({Rational(24), Rational(1)}, target) ==
          doctest::Approx(1.0));
    const double two_far = default_heuristic({Rational(20), Rational(1)}, target);
    CHECK(two_far == doctest::Approx(1.8));
}

TEST_CASE("gbfs solves and proves like dfs") {
    const Instance solvable = instance_of({3, 4, 5, 6}, 24);
    const SolveOutcome out = gbfs_solve(solvable);
    REQUIRE(out.status == SolveStatus::Solved);
    REQUIRE(out.solution.has_value());
    CHECK(out.solution->size() == 3);
    CHECK(validate(solvable, format_solution(*out.solution)).valid());

    CHECK(gbfs_solve(instance_of({2, 2}, 5)).status ==
          SolveStatus::ExhaustedUnsolvable);

    Budget zero;
    zero.max_expansions = 0;
    CHECK(gbfs_solve(solvable, zero).status == SolveStatus::BudgetExceeded);
}

TEST_CASE("gbfs and dfs agree on solvability") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint64_t> value(1, 10);
    std::uniform_int_distribution<std::uint64_t> target(1, 100);
    std::uniform_int_distribution<int> size(2, 4);

    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint64_t> numbers(size(rng));
        for (auto& v : numbers) v = value(rng);
        const Instance inst = instance_of(numbers, target(rng));

        const SolveOutcome via_dfs = dfs_solve(inst);
        const SolveOutcome via_gbfs = gbfs_solve(inst);
        CHECK(via_dfs.status == via_gbfs.status);
        if (via_gbfs.status == SolveStatus::Solved) {
            CHECK(validate(inst, format_solution(*via_gbfs.solution)).valid());
        }
    }
}

TEST_CASE("gbfs accepts a custom heuristic") {
    // constant heuristic degrades gbfs to insertion order but stays complete
    const Heuristic flat = [](const NumberState&, const Rational&) { return 1.0; };
    const Instance inst = instance_of({3, 4, 5, 6}, 24);
    const SolveOutcome out = gbfs_solve(inst, flat);
    REQUIRE(out.status == SolveStatus::Solved);
    CHECK(validate(inst, format_solution(*out.solution)).valid());
}

TEST_SUITE_END();
