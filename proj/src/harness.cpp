#include "countdown/harness.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "countdown/errors.hpp"
#include "countdown/validator.hpp"

namespace countdown {

using json = nlohmann::ordered_json;

namespace {

json step_to_json(const Step& step) {
    return json::array({step.x.str(), std::string(1, op_symbol(step.op)),
                        step.y.str(), step.result.str()});
}

Step step_from_json(const json& entry) {
    if (!entry.is_array() || entry.size() != 4) {
        throw DataError("witness step must be a [x, op, y, r] quadruple");
    }
    for (const auto& field : entry) {
        if (!field.is_string()) throw DataError("witness step fields must be strings");
    }
    auto x = Rational::parse(entry[0].get<std::string>());
    auto op = op_from_symbol(entry[1].get<std::string>());
    auto y = Rational::parse(entry[2].get<std::string>());
    auto r = Rational::parse(entry[3].get<std::string>());
    if (!x || !op || !y || !r) throw DataError("malformed witness step");
    return Step{std::move(*x), *op, std::move(*y), std::move(*r)};
}

std::uint64_t require_uint(const json& object, const char* key) {
    const auto& field = object.at(key);
    if (!field.is_number_unsigned()) {
        throw DataError(std::string(key) + " must be a non-negative integer");
    }
    return field.get<std::uint64_t>();
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
    json object;
    object["id"] = instance.id;
    object["size"] = instance.size();
    object["numbers"] = instance.numbers;
    object["target"] = instance.target;
    object["generator"] = std::string(gen_method_tag(instance.generator));
    object["seed"] = instance.seed;
    if (instance.witness) {
        json steps = json::array();
        for (const Step& step : *instance.witness) steps.push_back(step_to_json(step));
        object["witness"] = std::move(steps);
    }
    return object.dump();
}

Instance instance_from_json(const std::string& line) {
    json object;
    try {
        object = json::parse(line);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("bad JSON: ") + e.what());
    }
    if (!object.is_object()) throw DataError("instance line must be a JSON object");

    static const std::set<std::string> known{
        "id", "size", "numbers", "target", "generator", "seed", "witness"};
    for (const auto& [key, value] : object.items()) {
        if (!known.count(key)) throw DataError("unknown instance field '" + key + "'");
    }
    for (const char* required : {"id", "size", "numbers", "target", "generator", "seed"}) {
        if (!object.contains(required)) {
            throw DataError(std::string("missing instance field '") + required + "'");
        }
    }

    Instance instance;
    if (!object["id"].is_string()) throw DataError("id must be a string");
    instance.id = object["id"].get<std::string>();

    if (!object["numbers"].is_array()) throw DataError("numbers must be an array");
    for (const auto& n : object["numbers"]) {
        if (!n.is_number_unsigned()) {
            throw DataError("numbers must be non-negative integers");
        }
        instance.numbers.push_back(n.get<std::uint64_t>());
    }
    if (require_uint(object, "size") != instance.numbers.size()) {
        throw DataError("size does not match the number count");
    }
    if (instance.numbers.size() < 2) throw DataError("instances need at least 2 numbers");

    instance.target = require_uint(object, "target");
    instance.seed = require_uint(object, "seed");

    if (!object["generator"].is_string()) throw DataError("generator must be a string");
    auto method = gen_method_from_tag(object["generator"].get<std::string>());
    if (!method) {
        throw DataError("generator must be one of cd, rg, sos, external");
    }
    instance.generator = *method;

    if (object.contains("witness")) {
        if (!object["witness"].is_array()) throw DataError("witness must be an array");
        std::vector<Step> steps;
        for (const auto& entry : object["witness"]) steps.push_back(step_from_json(entry));
        instance.witness = std::move(steps);
    }
    return instance;
}

void write_instances(std::ostream& out, const std::vector<Instance>& instances) {
    for (const Instance& instance : instances) {
        out << instance_to_json(instance) << '\n';
    }
}

void write_instances_file(const std::string& path,
                          const std::vector<Instance>& instances) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path);
    write_instances(out, instances);
    if (!out) throw DataError("write failed: " + path);
}

std::vector<Instance> read_instances(std::istream& in) {
    std::vector<Instance> instances;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            instances.push_back(instance_from_json(line));
        } catch (const DataError& e) {
            throw DataError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return instances;
}

std::vector<Instance> read_instances_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open: " + path);
    return read_instances(in);
}

std::string run_result_to_json(const RunResult& result) {
    json object;
    object["id"] = result.id;
    object["size"] = result.size;
    object["status"] = std::string(solve_status_tag(result.status));
    object["expansions"] = result.expansions;
    object["millis"] = result.millis;
    if (result.status == SolveStatus::Solved) object["solution"] = result.solution;
    return object.dump();
}

RunResult run_result_from_json(const std::string& line) {
    json object;
    try {
        object = json::parse(line);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("bad JSON: ") + e.what());
    }
    RunResult result;
    result.id = object.at("id").get<std::string>();
    result.size = object.at("size").get<std::size_t>();
    auto status = solve_status_from_tag(object.at("status").get<std::string>());
    if (!status) throw DataError("unknown status tag");
    result.status = *status;
    result.expansions = object.at("expansions").get<std::uint64_t>();
    result.millis = object.at("millis").get<double>();
    if (object.contains("solution")) {
        result.solution = object["solution"].get<std::string>();
    }
    return result;
}

void write_results(std::ostream& out, const std::vector<RunResult>& results) {
    for (const RunResult& result : results) {
        out << run_result_to_json(result) << '\n';
    }
}

std::vector<RunResult> read_results(std::istream& in) {
    std::vector<RunResult> results;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) results.push_back(run_result_from_json(line));
    }
    return results;
}

std::vector<RunResult> read_results_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open: " + path);
    return read_results(in);
}

std::vector<RunResult> run_benchmark(const std::vector<Instance>& instances,
                                     SolverKind solver, const Budget& budget,
                                     std::size_t parallelism) {
    std::vector<RunResult> results(instances.size());
    if (instances.empty()) return results;
    parallelism = std::max<std::size_t>(1, std::min(parallelism, instances.size()));

    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> defect{false};
    std::string defect_id;
    std::mutex defect_mutex;

    auto worker = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= instances.size() || defect.load()) return;
            const Instance& instance = instances[i];
            SolveOutcome outcome = solver == SolverKind::Dfs
                                       ? dfs_solve(instance, budget)
                                       : gbfs_solve(instance, budget);
            RunResult& r = results[i];
            r.id = instance.id;
            r.size = instance.size();
            r.status = outcome.status;
            r.expansions = outcome.stats.expansions;
            r.millis = outcome.stats.elapsed_millis;
            if (outcome.status == SolveStatus::Solved) {
                r.solution = format_solution(*outcome.solution);
                if (!validate(instance, r.solution).valid()) {
                    std::lock_guard<std::mutex> lock(defect_mutex);
                    defect_id = instance.id;
                    defect.store(true);
                    return;
                }
            }
        }
    };

    if (parallelism == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parallelism);
        for (std::size_t t = 0; t < parallelism; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    if (defect.load()) {
        throw std::logic_error("solver returned an invalid solution for " + defect_id);
    }
    return results;
}

std::vector<AccuracyRow> aggregate_accuracy(const std::vector<RunResult>& results) {
    std::map<std::size_t, AccuracyRow> by_size;
    for (const RunResult& result : results) {
        AccuracyRow& row = by_size[result.size];
        row.size = result.size;
        ++row.total;
        if (result.status == SolveStatus::Solved) ++row.solved;
    }
    std::vector<AccuracyRow> rows;
    rows.reserve(by_size.size());
    for (auto& [size, row] : by_size) {
        row.accuracy = static_cast<double>(row.solved) / static_cast<double>(row.total);
        rows.push_back(row);
    }
    return rows;
}

std::string accuracy_to_csv(const std::vector<AccuracyRow>& rows) {
    std::ostringstream os;
    os << "size,solved,total,accuracy\n";
    char buf[96];
    for (const AccuracyRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.6f\n", row.size, row.solved,
                      row.total, row.accuracy);
        os << buf;
    }
    return os.str();
}

}  // namespace countdown
