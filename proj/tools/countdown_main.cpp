// countdown: generate, solve, count, validate, export and analyze Countdown
// puzzle datasets from the command line. Datasets are JSONL, aggregates are
// CSV. Exit codes: 0 success, 1 usage error, 2 data error, 3 validation
// found invalid solutions.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "countdown/analysis.hpp"
#include "countdown/counter.hpp"
#include "countdown/errors.hpp"
#include "countdown/generator.hpp"
#include "countdown/harness.hpp"
#include "countdown/pddl.hpp"
#include "countdown/solver.hpp"
#include "countdown/validator.hpp"

namespace fs = std::filesystem;
using namespace countdown;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInvalid = 3;

// "4..8", "4", or comma-separated mixes like "4,6,10..12".
std::vector<std::size_t> parse_sizes(const std::string& spec) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw CLI::ValidationError("--sizes", "empty size entry");
        auto dots = part.find("..");
        try {
            if (dots == std::string::npos) {
                sizes.push_back(std::stoul(part));
            } else {
                std::size_t lo = std::stoul(part.substr(0, dots));
                std::size_t hi = std::stoul(part.substr(dots + 2));
                if (lo > hi) throw CLI::ValidationError("--sizes", "range lo > hi");
                for (std::size_t s = lo; s <= hi; ++s) sizes.push_back(s);
            }
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("--sizes", "cannot parse '" + part + "'");
        }
    }
    if (sizes.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
    return sizes;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << text;
    if (!out) throw DataError("write failed: " + path);
}

void emit(const std::optional<std::string>& out_path, const std::string& text) {
    if (out_path) {
        write_text_file(*out_path, text);
    } else {
        std::cout << text;
    }
}

std::string json_escape(const std::string& raw) {
    std::string out;
    for (char c : raw) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

int cmd_generate(const std::string& method_tag, const std::string& sizes_spec,
                 std::size_t count, const GenConfig& base,
                 const std::string& out_path) {
    auto method = gen_method_from_tag(method_tag);
    if (!method || *method == GenMethod::External) {
        std::cerr << "error: --method must be cd, rg or sos\n";
        return kExitUsage;
    }
    std::vector<std::size_t> sizes = parse_sizes(sizes_spec);
    std::vector<Instance> dataset = generate_dataset(*method, base, count, sizes);
    write_instances_file(out_path, dataset);
    std::cerr << "wrote " << dataset.size() << " instances to " << out_path << "\n";
    return kExitOk;
}

int cmd_solve(const std::string& dataset_path, const std::string& solver_tag,
              const Budget& budget, std::size_t parallelism,
              const std::string& out_path,
              const std::optional<std::string>& solutions_dir) {
    SolverKind kind;
    if (solver_tag == "dfs") {
        kind = SolverKind::Dfs;
    } else if (solver_tag == "gbfs") {
        kind = SolverKind::Gbfs;
    } else {
        std::cerr << "error: --solver must be dfs or gbfs\n";
        return kExitUsage;
    }
    std::vector<Instance> instances = read_instances_file(dataset_path);
    std::vector<RunResult> results = run_benchmark(instances, kind, budget, parallelism);

    std::ofstream out(out_path);
    if (!out) throw DataError("cannot open for writing: " + out_path);
    write_results(out, results);

    if (solutions_dir) {
        fs::create_directories(*solutions_dir);
        for (const RunResult& r : results) {
            if (r.status != SolveStatus::Solved) continue;
            write_text_file((fs::path(*solutions_dir) / (r.id + ".txt")).string(),
                            r.solution);
        }
    }

    std::size_t solved = 0;
    for (const RunResult& r : results) solved += r.status == SolveStatus::Solved;
    std::cerr << "solved " << solved << "/" << results.size() << ", results in "
              << out_path << "\n";
    return kExitOk;
}

int cmd_count(const std::string& dataset_path, std::uint64_t max_expansions,
              std::uint64_t max_millis, const std::optional<std::string>& out_path) {
    std::vector<Instance> instances = read_instances_file(dataset_path);
    Budget budget;
    budget.max_expansions = max_expansions;
    budget.max_millis = max_millis;

    std::ostringstream os;
    os << "instance_id,size,count,complete,expansions,millis\n";
    for (const Instance& instance : instances) {
        CountResult r = count_solutions(instance, budget);
        os << instance.id << ',' << instance.size() << ',' << r.count.str() << ','
           << (r.complete ? "true" : "false") << ',' << r.expansions << ','
           << static_cast<std::uint64_t>(r.elapsed_millis) << "\n";
    }
    emit(out_path, os.str());
    return kExitOk;
}

int cmd_validate(const std::string& dataset_path, const std::string& solutions_dir) {
    std::vector<Instance> instances = read_instances_file(dataset_path);
    bool all_valid = true;
    std::cout << "[\n";
    bool first = true;
    for (const Instance& instance : instances) {
        fs::path file = fs::path(solutions_dir) / (instance.id + ".txt");
        if (!fs::exists(file)) {
            std::cerr << "warning: no solution file for " << instance.id << ", skipped\n";
            continue;
        }
        std::ifstream in(file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        ValidationReport report = validate(instance, buffer.str());
        all_valid = all_valid && report.valid();

        if (!first) std::cout << ",\n";
        first = false;
        std::cout << "  {\"id\": \"" << json_escape(instance.id) << "\", \"valid\": "
                  << (report.valid() ? "true" : "false") << ", \"errors\": [";
        bool first_err = true;
        for (ErrorCategory cat : report.errors) {
            if (!first_err) std::cout << ", ";
            first_err = false;
            std::cout << '"' << error_category_name(cat) << '"';
        }
        std::cout << "], \"notes\": [";
        bool first_note = true;
        for (const StepNote& note : report.per_step_notes) {
            if (!first_note) std::cout << ", ";
            first_note = false;
            std::cout << "\"" << json_escape(note.message) << "\"";
        }
        std::cout << "]}";
    }
    std::cout << "\n]\n";
    return all_valid ? kExitOk : kExitInvalid;
}

int cmd_pddl(const std::string& dataset_path, const std::string& out_dir) {
    std::vector<Instance> instances = read_instances_file(dataset_path);
    fs::create_directories(out_dir);
    const std::string domain = emit_domain();
    for (const Instance& instance : instances) {
        fs::path base = fs::path(out_dir) / instance.id;
        write_text_file(base.string() + "-domain.pddl", domain);
        write_text_file(base.string() + "-problem.pddl",
                        emit_problem(instance, instance.id));
    }
    std::cerr << "wrote " << 2 * instances.size() << " files to " << out_dir << "\n";
    return kExitOk;
}

int cmd_bound(std::size_t n_max, const std::optional<std::string>& out_path) {
    std::ostringstream os;
    os << "n,total,log10_total\n";
    char buf[64];
    for (std::size_t n = 2; n <= n_max; ++n) {
        BoundReport report = state_space_bound(n);
        std::snprintf(buf, sizeof buf, ",%.4f\n", log10_bigint(report.total));
        os << n << ',' << report.total.str() << buf;
    }
    emit(out_path, os.str());
    return kExitOk;
}

int cmd_stats(const std::string& dataset_path, const std::string& counts_path,
              const std::optional<std::string>& out_path) {
    std::vector<Instance> instances = read_instances_file(dataset_path);

    std::ifstream in(counts_path);
    if (!in) throw DataError("cannot open: " + counts_path);
    std::unordered_map<std::string, double> counts;
    std::string line;
    std::getline(in, line);  // header
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string id, size, count;
        if (!std::getline(row, id, ',') || !std::getline(row, size, ',') ||
            !std::getline(row, count, ',')) {
            throw DataError("counts line " + std::to_string(lineno) + " malformed");
        }
        try {
            counts[id] = std::stod(count);
        } catch (const std::logic_error&) {
            throw DataError("counts line " + std::to_string(lineno) +
                            ": bad count '" + count + "'");
        }
    }
    emit(out_path, stats_to_csv(dataset_stats(instances, counts)));
    return kExitOk;
}

int cmd_accuracy(const std::string& results_path,
                 const std::optional<std::string>& out_path) {
    std::vector<RunResult> results = read_results_file(results_path);
    emit(out_path, accuracy_to_csv(aggregate_accuracy(results)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Countdown puzzle toolkit: datasets, search, counting, "
                 "validation, PDDL export and state-space bounds"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Generate an instance dataset");
    std::string method = "cd";
    std::string sizes = "4..8";
    std::size_t count = 100;
    GenConfig config;
    std::string gen_out;
    generate->add_option("--method", method, "cd, rg or sos")->capture_default_str();
    generate->add_option("--sizes", sizes, "sizes, e.g. 4..8 or 4,6,10..12")
        ->capture_default_str();
    generate->add_option("--count", count, "instances per size")->capture_default_str();
    generate->add_option("--seed", config.seed, "base seed")->capture_default_str();
    generate->add_option("--input-lo", config.input_range.lo, "input range low")
        ->capture_default_str();
    generate->add_option("--input-hi", config.input_range.hi, "input range high")
        ->capture_default_str();
    generate->add_option("--target-lo", config.target_range.lo, "target range low")
        ->capture_default_str();
    generate->add_option("--target-hi", config.target_range.hi, "target range high")
        ->capture_default_str();
    generate->add_option("--rollouts", config.rollouts, "rollouts per cd attempt")
        ->capture_default_str();
    generate->add_option("--retry-cap", config.retry_cap, "bounded retry count")
        ->capture_default_str();
    generate->add_option("--out", gen_out, "output JSONL path")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "Solve a dataset under budgets");
    std::string dataset;
    std::string solver = "dfs";
    Budget budget;
    std::size_t parallelism = 1;
    std::string solve_out;
    std::string solutions_dir;
    solve->add_option("--dataset", dataset, "instance JSONL")->required();
    solve->add_option("--solver", solver, "dfs or gbfs")->capture_default_str();
    solve->add_option("--max-expansions", budget.max_expansions, "expansion budget")
        ->capture_default_str();
    solve->add_option("--max-millis", budget.max_millis, "time budget per instance")
        ->capture_default_str();
    solve->add_option("--max-frontier", budget.max_frontier, "stored-state budget")
        ->capture_default_str();
    solve->add_option("--parallelism", parallelism, "worker threads")
        ->capture_default_str();
    solve->add_option("--out", solve_out, "output results JSONL")->required();
    solve->add_option("--solutions", solutions_dir,
                      "also write <id>.txt solution files here");

    // count
    auto* count_cmd = app.add_subcommand("count", "Exhaustively count solutions");
    std::string count_dataset;
    std::uint64_t count_expansions = 100'000'000;
    std::uint64_t count_millis = 86'400'000;
    std::string count_out;
    count_cmd->add_option("--dataset", count_dataset, "instance JSONL")->required();
    count_cmd->add_option("--max-expansions", count_expansions, "tree-node budget")
        ->capture_default_str();
    count_cmd->add_option("--max-millis", count_millis, "time budget per instance")
        ->capture_default_str();
    count_cmd->add_option("--out", count_out, "output CSV (default stdout)");

    // validate
    auto* validate_cmd =
        app.add_subcommand("validate", "Validate solution files against a dataset");
    std::string val_dataset;
    std::string val_solutions;
    validate_cmd->add_option("--dataset", val_dataset, "instance JSONL")->required();
    validate_cmd->add_option("--solutions", val_solutions, "directory of <id>.txt files")
        ->required();

    // pddl
    auto* pddl_cmd = app.add_subcommand("pddl", "Export PDDL domain/problem files");
    std::string pddl_dataset;
    std::string pddl_out;
    pddl_cmd->add_option("--dataset", pddl_dataset, "instance JSONL")->required();
    pddl_cmd->add_option("--out", pddl_out, "output directory")->required();

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "State-space bound table");
    std::size_t n_max = 10;
    std::string bound_out;
    bound_cmd->add_option("--n-max", n_max, "largest instance size")
        ->capture_default_str();
    bound_cmd->add_option("--out", bound_out, "output CSV (default stdout)");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "Solution-count summaries");
    std::string stats_dataset;
    std::string stats_counts;
    std::string stats_out;
    stats_cmd->add_option("--dataset", stats_dataset, "instance JSONL")->required();
    stats_cmd->add_option("--counts", stats_counts, "CSV from the count subcommand")
        ->required();
    stats_cmd->add_option("--out", stats_out, "output CSV (default stdout)");

    // accuracy
    auto* accuracy_cmd =
        app.add_subcommand("accuracy", "Accuracy-per-size table from solve results");
    std::string acc_results;
    std::string acc_out;
    accuracy_cmd->add_option("--results", acc_results, "results JSONL from solve")
        ->required();
    accuracy_cmd->add_option("--out", acc_out, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    auto opt = [](const std::string& s) {
        return s.empty() ? std::nullopt : std::optional<std::string>(s);
    };

    try {
        if (generate->parsed()) {
            return cmd_generate(method, sizes, count, config, gen_out);
        }
        if (solve->parsed()) {
            return cmd_solve(dataset, solver, budget, parallelism, solve_out,
                             opt(solutions_dir));
        }
        if (count_cmd->parsed()) {
            return cmd_count(count_dataset, count_expansions, count_millis,
                             opt(count_out));
        }
        if (validate_cmd->parsed()) {
            return cmd_validate(val_dataset, val_solutions);
        }
        if (pddl_cmd->parsed()) {
            return cmd_pddl(pddl_dataset, pddl_out);
        }
        if (bound_cmd->parsed()) {
            return cmd_bound(n_max, opt(bound_out));
        }
        if (stats_cmd->parsed()) {
            return cmd_stats(stats_dataset, stats_counts, opt(stats_out));
        }
        if (accuracy_cmd->parsed()) {
            return cmd_accuracy(acc_results, opt(acc_out));
        }
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
