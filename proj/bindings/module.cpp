// Python bindings for the core library. Everything crosses the boundary as
// plain Python types: steps are (x, op, y, result) string 4-tuples, big
// integers become Python ints, enums become their string tags.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "countdown/analysis.hpp"
#include "countdown/counter.hpp"
#include "countdown/errors.hpp"
#include "countdown/generator.hpp"
#include "countdown/harness.hpp"
#include "countdown/model.hpp"
#include "countdown/pddl.hpp"
#include "countdown/solver.hpp"
#include "countdown/validator.hpp"

namespace py = pybind11;
using namespace countdown;

namespace {

py::int_ to_py_int(const BigInt& value) {
    const std::string digits = value.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Rational parse_rational(const std::string& text) {
    const auto value = Rational::parse(text);
    if (!value) throw py::value_error("not a rational literal: " + text);
    return *value;
}

py::tuple step_to_tuple(const Step& step) {
    return py::make_tuple(step.x.str(), std::string(1, op_symbol(step.op)),
                          step.y.str(), step.result.str());
}

py::list steps_to_list(const std::vector<Step>& steps) {
    py::list out;
    for (const Step& step : steps) out.append(step_to_tuple(step));
    return out;
}

Step step_from_tuple(const py::sequence& quad) {
    if (py::len(quad) != 4)
        throw py::value_error("a step is a (x, op, y, result) 4-tuple");
    const Rational x = parse_rational(quad[0].cast<std::string>());
    const auto op = op_from_symbol(quad[1].cast<std::string>());
    if (!op) throw py::value_error("unknown operator in step");
    const Rational y = parse_rational(quad[2].cast<std::string>());
    const Rational r = parse_rational(quad[3].cast<std::string>());
    return Step{x, *op, y, r};
}

std::vector<Step> steps_from_list(const py::sequence& quads) {
    std::vector<Step> steps;
    steps.reserve(py::len(quads));
    for (const auto& quad : quads) steps.push_back(step_from_tuple(py::reinterpret_borrow<py::sequence>(quad)));
    return steps;
}

GenMethod method_from_string(const std::string& tag) {
    const auto method = gen_method_from_tag(tag);
    if (!method) throw py::value_error("unknown generator tag: " + tag);
    return *method;
}

GenConfig make_config(std::size_t n, std::uint64_t seed,
                      std::pair<std::uint64_t, std::uint64_t> input_range,
                      std::pair<std::uint64_t, std::uint64_t> target_range,
                      std::uint64_t rollouts, std::uint64_t retry_cap,
                      std::uint64_t sos_node_budget, std::size_t sos_frontier_cap) {
    GenConfig config;
    config.n = n;
    config.seed = seed;
    config.input_range = {input_range.first, input_range.second};
    config.target_range = {target_range.first, target_range.second};
    config.rollouts = rollouts;
    config.retry_cap = retry_cap;
    config.sos_node_budget = sos_node_budget;
    config.sos_frontier_cap = sos_frontier_cap;
    return config;
}

Budget make_budget(std::uint64_t max_expansions, std::uint64_t max_millis,
                   std::uint64_t max_frontier) {
    return Budget{max_expansions, max_millis, max_frontier};
}

py::dict outcome_to_dict(const SolveOutcome& outcome) {
    py::dict out;
    out["status"] = std::string(solve_status_tag(outcome.status));
    out["expansions"] = outcome.stats.expansions;
    out["generated"] = outcome.stats.generated;
    out["peak_frontier"] = outcome.stats.peak_frontier;
    out["millis"] = outcome.stats.elapsed_millis;
    if (outcome.solution) {
        out["solution"] = format_solution(*outcome.solution);
        out["steps"] = steps_to_list(*outcome.solution);
    } else {
        out["solution"] = py::none();
        out["steps"] = py::none();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Countdown puzzle toolkit: generation, search, counting, validation";

    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<RetriesExhausted>(m, "RetriesExhausted", PyExc_RuntimeError);

    py::class_<Instance>(m, "Instance")
        .def(py::init([](std::vector<std::uint64_t> numbers, std::uint64_t target,
                         std::string id, const std::string& generator,
                         std::uint64_t seed, const std::optional<py::sequence>& witness) {
                 Instance inst;
                 inst.numbers = std::move(numbers);
                 inst.target = target;
                 inst.id = std::move(id);
                 inst.generator = method_from_string(generator);
                 inst.seed = seed;
                 if (witness) inst.witness = steps_from_list(*witness);
                 return inst;
             }),
             py::arg("numbers"), py::arg("target"), py::arg("id") = "",
             py::arg("generator") = "external", py::arg("seed") = 0,
             py::arg("witness") = py::none())
        .def_readonly("id", &Instance::id)
        .def_readonly("numbers", &Instance::numbers)
        .def_readonly("target", &Instance::target)
        .def_readonly("seed", &Instance::seed)
        .def_property_readonly("size", &Instance::size)
        .def_property_readonly("generator",
                               [](const Instance& inst) {
                                   return std::string(gen_method_tag(inst.generator));
                               })
        .def_property_readonly("witness",
                               [](const Instance& inst) -> py::object {
                                   if (!inst.witness) return py::none();
                                   return steps_to_list(*inst.witness);
                               })
        .def("to_json", &instance_to_json)
        .def_static("from_json", &instance_from_json, py::arg("line"))
        .def("__repr__", [](const Instance& inst) {
            std::string out = "Instance(id='" + inst.id + "', numbers=[";
            for (std::size_t i = 0; i < inst.numbers.size(); ++i) {
                if (i) out += ", ";
                out += std::to_string(inst.numbers[i]);
            }
            out += "], target=" + std::to_string(inst.target) + ")";
            return out;
        });

    m.def(
        "generate",
        [](const std::string& method, std::size_t n, std::uint64_t seed,
           std::pair<std::uint64_t, std::uint64_t> input_range,
           std::pair<std::uint64_t, std::uint64_t> target_range,
           std::uint64_t rollouts, std::uint64_t retry_cap,
           std::uint64_t sos_node_budget, std::size_t sos_frontier_cap) {
            const GenConfig config =
                make_config(n, seed, input_range, target_range, rollouts,
                            retry_cap, sos_node_budget, sos_frontier_cap);
            return generate_one(method_from_string(method), config);
        },
        py::arg("method"), py::arg("n"), py::arg("seed"),
        py::arg("input_range") = std::pair<std::uint64_t, std::uint64_t>{1, 99},
        py::arg("target_range") = std::pair<std::uint64_t, std::uint64_t>{10, 999},
        py::arg("rollouts") = 1000, py::arg("retry_cap") = 1000,
        py::arg("sos_node_budget") = 1'000'000, py::arg("sos_frontier_cap") = 128,
        py::call_guard<py::gil_scoped_release>(),
        "Generate one instance with the given method (cd, rg, or sos).");

    m.def(
        "generate_dataset",
        [](const std::string& method, const std::vector<std::size_t>& sizes,
           std::size_t count, std::uint64_t seed,
           std::pair<std::uint64_t, std::uint64_t> input_range,
           std::pair<std::uint64_t, std::uint64_t> target_range,
           std::uint64_t rollouts, std::uint64_t retry_cap,
           std::uint64_t sos_node_budget, std::size_t sos_frontier_cap) {
            const GenConfig config =
                make_config(0, seed, input_range, target_range, rollouts,
                            retry_cap, sos_node_budget, sos_frontier_cap);
            return generate_dataset(method_from_string(method), config, count, sizes);
        },
        py::arg("method"), py::arg("sizes"), py::arg("count"), py::arg("seed"),
        py::arg("input_range") = std::pair<std::uint64_t, std::uint64_t>{1, 99},
        py::arg("target_range") = std::pair<std::uint64_t, std::uint64_t>{10, 999},
        py::arg("rollouts") = 1000, py::arg("retry_cap") = 1000,
        py::arg("sos_node_budget") = 1'000'000, py::arg("sos_frontier_cap") = 128,
        py::call_guard<py::gil_scoped_release>(),
        "Generate `count` instances per size; ids follow <method>-n<size>-<index>.");

    m.def(
        "solve",
        [](const Instance& instance, const std::string& solver,
           std::uint64_t max_expansions, std::uint64_t max_millis,
           std::uint64_t max_frontier) {
            const Budget budget = make_budget(max_expansions, max_millis, max_frontier);
            SolveOutcome outcome;
            {
                py::gil_scoped_release release;
                if (solver == "dfs") {
                    outcome = dfs_solve(instance, budget);
                } else if (solver == "gbfs") {
                    outcome = gbfs_solve(instance, budget);
                } else {
                    throw std::invalid_argument("unknown solver: " + solver);
                }
            }
            return outcome_to_dict(outcome);
        },
        py::arg("instance"), py::arg("solver") = "dfs",
        py::arg("max_expansions") = Budget{}.max_expansions,
        py::arg("max_millis") = Budget{}.max_millis,
        py::arg("max_frontier") = Budget{}.max_frontier,
        "Run dfs or gbfs on one instance; returns a result dict.");

    m.def(
        "count_solutions",
        [](const Instance& instance, std::uint64_t max_expansions,
           std::uint64_t max_millis) {
            CountResult result;
            {
                py::gil_scoped_release release;
                Budget budget;
                budget.max_expansions = max_expansions;
                budget.max_millis = max_millis;
                result = count_solutions(instance, budget);
            }
            py::dict out;
            out["count"] = to_py_int(result.count);
            out["complete"] = result.complete;
            out["expansions"] = result.expansions;
            out["millis"] = result.elapsed_millis;
            return out;
        },
        py::arg("instance"), py::arg("max_expansions") = 100'000'000,
        py::arg("max_millis") = Budget{}.max_millis,
        "Count distinct solution step sequences; lower bound when not complete.");

    m.def(
        "validate",
        [](const Instance& instance, const std::string& text) {
            const ValidationReport report = validate(instance, text);
            py::dict out;
            out["valid"] = report.valid();
            py::list errors;
            for (const ErrorCategory category : report.errors)
                errors.append(std::string(error_category_name(category)));
            out["errors"] = errors;
            py::list notes;
            for (const StepNote& note : report.per_step_notes) {
                py::dict entry;
                entry["line"] = note.line;
                entry["category"] = std::string(error_category_name(note.category));
                entry["message"] = note.message;
                notes.append(entry);
            }
            out["notes"] = notes;
            if (report.parsed) {
                out["steps"] = steps_to_list(*report.parsed);
            } else {
                out["steps"] = py::none();
            }
            return out;
        },
        py::arg("instance"), py::arg("text"),
        "Check a solution text against an instance; reports all error categories.");

    m.def(
        "parse_solution",
        [](const std::string& text) -> py::object {
            const auto steps = parse_solution(text);
            if (!steps) return py::none();
            return steps_to_list(*steps);
        },
        py::arg("text"), "Strictly parse solution text; None when malformed.");

    m.def(
        "legal_actions",
        [](const std::vector<std::string>& values) {
            std::vector<Rational> parsed;
            parsed.reserve(values.size());
            for (const std::string& value : values) parsed.push_back(parse_rational(value));
            const NumberState state = make_state(std::move(parsed));
            py::list out;
            for (const Action& action : legal_actions(state))
                out.append(py::make_tuple(action.x.str(),
                                          std::string(1, op_symbol(action.op)),
                                          action.y.str(), action.result().str()));
            return out;
        },
        py::arg("values"),
        "Legal actions for a state of rational strings, sorted by (op, x, y).");

    m.def("format_solution",
          [](const py::sequence& quads) { return format_solution(steps_from_list(quads)); },
          py::arg("steps"), "Render steps as canonical 'x op y = r' lines.");

    m.def("emit_domain", &emit_domain, "The shared PDDL domain text.");
    m.def(
        "emit_problem",
        [](const Instance& instance, const std::optional<std::string>& name) {
            return emit_problem(instance, name.value_or(instance.id));
        },
        py::arg("instance"), py::arg("name") = py::none(),
        "PDDL problem text for one instance.");

    m.def("branching_bound", &branching_bound, py::arg("k"),
          "Upper bound 3k(k-1) on actions from a k-number state.");

    m.def(
        "state_space_bound",
        [](std::size_t n) {
            const BoundReport report = state_space_bound(n);
            py::dict out;
            out["n"] = report.n;
            py::list layers;
            for (const BigInt& bound : report.layer_bounds) layers.append(to_py_int(bound));
            out["layers"] = layers;
            out["total"] = to_py_int(report.total);
            out["log10_total"] = log10_bigint(report.total);
            return out;
        },
        py::arg("n"), "Layer-by-layer upper bound on distinct reachable states.");

    m.def("read_instances", &read_instances_file, py::arg("path"),
          "Load a JSONL dataset.");
    m.def("write_instances", &write_instances_file, py::arg("path"),
          py::arg("instances"), "Write a JSONL dataset.");

    m.attr("__version__") = "0.1.0";
}
