#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "countdown/model.hpp"
#include "countdown/solver.hpp"

namespace countdown {

// Instance JSONL: one object per line with exactly the keys id, size,
// numbers, target, generator, seed and optionally witness (list of
// [x, op, y, r] string quadruples). Unknown keys and size/numbers
// disagreements are DataErrors, so a dataset round-trips losslessly or not
// at all.
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& line);

void write_instances(std::ostream& out, const std::vector<Instance>& instances);
void write_instances_file(const std::string& path,
                          const std::vector<Instance>& instances);
std::vector<Instance> read_instances(std::istream& in);
std::vector<Instance> read_instances_file(const std::string& path);

enum class SolverKind : std::uint8_t { Dfs, Gbfs };

struct RunResult {
    std::string id;
    std::size_t size = 0;
    SolveStatus status = SolveStatus::BudgetExceeded;
    std::uint64_t expansions = 0;
    double millis = 0;
    std::string solution;  // canonical text, empty unless Solved
};

std::string run_result_to_json(const RunResult& result);
RunResult run_result_from_json(const std::string& line);
void write_results(std::ostream& out, const std::vector<RunResult>& results);
std::vector<RunResult> read_results(std::istream& in);
std::vector<RunResult> read_results_file(const std::string& path);

// Solves every instance under the same per-instance budget, `parallelism`
// worker threads pulling from a shared index. Results land in dataset order
// no matter the thread count. Every Solved solution is re-validated against
// its instance before being recorded; a dirty one means a solver defect and
// throws.
std::vector<RunResult> run_benchmark(const std::vector<Instance>& instances,
                                     SolverKind solver, const Budget& budget,
                                     std::size_t parallelism = 1);

struct AccuracyRow {
    std::size_t size = 0;
    std::size_t solved = 0;
    std::size_t total = 0;
    double accuracy = 0;
};

// Solved per size; everything else (exhausted or out of budget) counts as
// unsolved. Rows ascend by size.
std::vector<AccuracyRow> aggregate_accuracy(const std::vector<RunResult>& results);
std::string accuracy_to_csv(const std::vector<AccuracyRow>& rows);

}  // namespace countdown
