#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "countdown/errors.hpp"
#include "countdown/harness.hpp"
#include "countdown/model.hpp"
#include "countdown/validator.hpp"

using namespace countdown;

namespace {

Instance sample_instance() {
    Instance inst;
    inst.id = "t1";
    inst.numbers = {3, 4};
    inst.target = 7;
    inst.generator = GenMethod::External;
    inst.seed = 0;
    return inst;
}

}  // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("instances serialize with a fixed key order") {
    Instance inst = sample_instance();
    CHECK(instance_to_json(inst) ==
          R"({"id":"t1","size":2,"numbers":[3,4],"target":7,"generator":"external","seed":0})");

    inst.witness = std::vector<Step>{make_step(Op::Add, Rational(3), Rational(4))};
    CHECK(instance_to_json(inst) ==
          R"({"id":"t1","size":2,"numbers":[3,4],"target":7,"generator":"external","seed":0,"witness":[["3","+","4","7"]]})");
}

TEST_CASE("instances round-trip through json") {
    Instance inst = sample_instance();
    inst.witness = std::vector<Step>{make_step(Op::Add, Rational(3), Rational(4))};

    const Instance back = instance_from_json(instance_to_json(inst));
    CHECK(back.id == inst.id);
    CHECK(back.numbers == inst.numbers);
    CHECK(back.target == inst.target);
    CHECK(back.generator == inst.generator);
    CHECK(back.seed == inst.seed);
    CHECK(back.witness == inst.witness);
    CHECK(instance_to_json(back) == instance_to_json(inst));
}

TEST_CASE("malformed instances are data errors") {
    // unknown field
    CHECK_THROWS_AS(
        instance_from_json(
            R"({"id":"x","size":2,"numbers":[3,4],"target":7,"generator":"cd","seed":0,"extra":1})"),
        DataError);
    // size disagrees with numbers
    CHECK_THROWS_AS(
        instance_from_json(
            R"({"id":"x","size":3,"numbers":[3,4],"target":7,"generator":"cd","seed":0})"),
        DataError);
    // fewer than two numbers
    CHECK_THROWS_AS(
        instance_from_json(
            R"({"id":"x","size":1,"numbers":[3],"target":7,"generator":"cd","seed":0})"),
        DataError);
    // negative number
    CHECK_THROWS_AS(
        instance_from_json(
            R"({"id":"x","size":2,"numbers":[-3,4],"target":7,"generator":"cd","seed":0})"),
        DataError);
    // unknown generator tag
    CHECK_THROWS_AS(
        instance_from_json(
            R"({"id":"x","size":2,"numbers":[3,4],"target":7,"generator":"nope","seed":0})"),
        DataError);
    // witness rows must be 4-string quadruples
    CHECK_THROWS_AS(
        instance_from_json(
            R"({"id":"x","size":2,"numbers":[3,4],"target":7,"generator":"cd","seed":0,"witness":[["3","+","4"]]})"),
        DataError);
    // missing required field
    CHECK_THROWS_AS(
        instance_from_json(R"({"id":"x","size":2,"numbers":[3,4],"seed":0})"),
        DataError);
    // not json at all
    CHECK_THROWS_AS(instance_from_json("not json"), DataError);
}

TEST_CASE("jsonl streams report the offending line") {
    std::istringstream in(
        R"({"id":"a","size":2,"numbers":[3,4],"target":7,"generator":"cd","seed":0})"
        "\n"
        R"({"id":"b","bogus":true})"
        "\n");
    try {
        read_instances(in);
        FAIL("expected a DataError");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("jsonl io round-trips a mixed dataset") {
    Instance a = sample_instance();
    Instance b = sample_instance();
    b.id = "t2";
    b.numbers = {10, 25, 50, 75};
    b.target = 952;
    b.generator = GenMethod::CD;
    b.seed = 99;

    std::ostringstream out;
    write_instances(out, {a, b});

    std::istringstream in(out.str());
    const auto back = read_instances(in);
    REQUIRE(back.size() == 2);
    CHECK(instance_to_json(back[0]) == instance_to_json(a));
    CHECK(instance_to_json(back[1]) == instance_to_json(b));
}

TEST_CASE("run results keep the solution only when solved") {
    RunResult solved;
    solved.id = "t1";
    solved.size = 2;
    solved.status = SolveStatus::Solved;
    solved.expansions = 1;
    solved.millis = 0.5;
    solved.solution = "3 + 4 = 7\n";

    const std::string line = run_result_to_json(solved);
    CHECK(line.find("\"solution\"") != std::string::npos);
    const RunResult back = run_result_from_json(line);
    CHECK(back.id == solved.id);
    CHECK(back.status == SolveStatus::Solved);
    CHECK(back.solution == solved.solution);

    RunResult failed = solved;
    failed.status = SolveStatus::BudgetExceeded;
    failed.solution.clear();
    const std::string failed_line = run_result_to_json(failed);
    CHECK(failed_line.find("\"solution\"") == std::string::npos);
    CHECK(run_result_from_json(failed_line).status == SolveStatus::BudgetExceeded);
}

TEST_CASE("benchmarks preserve dataset order at any parallelism") {
    std::vector<Instance> dataset;
    for (std::uint64_t i = 0; i < 6; ++i) {
        Instance inst;
        inst.id = "i" + std::to_string(i);
        inst.numbers = {3 + i, 4, 5, 6};
        inst.target = 20 + 2 * i;
        dataset.push_back(inst);
    }

    const Budget budget;
    const auto serial = run_benchmark(dataset, SolverKind::Dfs, budget, 1);
    const auto parallel = run_benchmark(dataset, SolverKind::Dfs, budget, 3);

    REQUIRE(serial.size() == dataset.size());
    REQUIRE(parallel.size() == dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        CHECK(serial[i].id == dataset[i].id);
        CHECK(parallel[i].id == serial[i].id);
        CHECK(parallel[i].status == serial[i].status);
        CHECK(parallel[i].expansions == serial[i].expansions);
        CHECK(parallel[i].solution == serial[i].solution);
        if (serial[i].status == SolveStatus::Solved) {
            CHECK(validate(dataset[i], serial[i].solution).valid());
        }
    }

    const auto gbfs = run_benchmark(dataset, SolverKind::Gbfs, budget, 2);
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        CHECK(gbfs[i].id == dataset[i].id);
        if (gbfs[i].status == SolveStatus::Solved) {
            CHECK(validate(dataset[i], gbfs[i].solution).valid());
        }
    }
}

TEST_CASE("accuracy aggregates by size") {
    auto row = [](const char* id, std::size_t size, SolveStatus status) {
        RunResult r;
        r.id = id;
        r.size = size;
        r.status = status;
        return r;
    };

    const std::vector<RunResult> results = {
        row("a", 4, SolveStatus::Solved),
        row("b", 4, SolveStatus::BudgetExceeded),
        row("c", 5, SolveStatus::Solved),
        row("d", 5, SolveStatus::Solved),
        row("e", 4, SolveStatus::ExhaustedUnsolvable),
    };

    const auto rows = aggregate_accuracy(results);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].size == 4);
    CHECK(rows[0].solved == 1);
    CHECK(rows[0].total == 3);
    CHECK(rows[0].accuracy == doctest::Approx(1.0 / 3.0));
    CHECK(rows[1].size == 5);
    CHECK(rows[1].solved == 2);
    CHECK(rows[1].total == 2);

    const std::string csv = accuracy_to_csv(rows);
    CHECK(csv.rfind("size,solved,total,accuracy\n", 0) == 0);
    CHECK(csv.find("5,2,2,1.000000\n") != std::string::npos);
}

TEST_SUITE_END();
