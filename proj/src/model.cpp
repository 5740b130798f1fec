#include "countdown/model.hpp"

#include <algorithm>
#include <sstream>

#include <boost/functional/hash.hpp>

#include "countdown/errors.hpp"

namespace countdown {

char op_symbol(Op op) {
    switch (op) {
        case Op::Add: return '+';
        case Op::Mul: return '*';
        case Op::Sub: return '-';
        case Op::Div: return '/';
    }
    return '?';
}

std::optional<Op> op_from_symbol(std::string_view token) {
    if (token.size() != 1) return std::nullopt;
    switch (token[0]) {
        case '+': return Op::Add;
        case '*': return Op::Mul;
        case '-': return Op::Sub;
        case '/': return Op::Div;
        default: return std::nullopt;
    }
}

Rational apply_op(Op op, const Rational& x, const Rational& y) {
    switch (op) {
        case Op::Add: return x + y;
        case Op::Mul: return x * y;
        case Op::Sub: return x - y;
        case Op::Div: return x / y;
    }
    throw std::logic_error("unreachable operator");
}

NumberState make_state(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    return values;
}

std::size_t state_hash(const NumberState& state) {
    std::size_t seed = state.size();
    for (const Rational& v : state) boost::hash_combine(seed, v.hash());
    return seed;
}

namespace {

struct ValueRun {
    Rational value;
    std::size_t count;
};

// Collapse the sorted state into (value, multiplicity) runs.
std::vector<ValueRun> value_runs(const NumberState& state) {
    std::vector<ValueRun> runs;
    for (const Rational& v : state) {
        if (!runs.empty() && runs.back().value == v) {
            ++runs.back().count;
        } else {
            runs.push_back({v, 1});
        }
    }
    return runs;
}

}  // namespace

std::vector<Action> legal_actions(const NumberState& state) {
    std::vector<Action> out;
    if (state.size() < 2) return out;

    const auto runs = value_runs(state);
    const std::size_t m = runs.size();

    auto pair_available = [&](std::size_t i, std::size_t j) {
        return i != j || runs[i].count >= 2;
    };

    // Add, then Mul: x <= y, ascending (x, y).
    for (Op op : {Op::Add, Op::Mul}) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                if (!pair_available(i, j)) continue;
                out.push_back({op, runs[i].value, runs[j].value});
            }
        }
    }
    // Sub: x >= y, so x runs over the pair maximum; ascending (x, y).
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
            if (!pair_available(i, j)) continue;
            out.push_back({Op::Sub, runs[j].value, runs[i].value});
        }
    }
    // Div: every ordered pair with positive divisor; equal values once.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!pair_available(i, j)) continue;
            if (runs[j].value.is_zero()) continue;
            if (i == j) {
                out.push_back({Op::Div, runs[i].value, runs[i].value});
            } else {
                out.push_back({Op::Div, runs[i].value, runs[j].value});
            }
        }
    }
    return out;
}

NumberState apply_action(const NumberState& state, const Action& action) {
    NumberState next = state;

    auto remove_one = [&next](const Rational& v) {
        auto it = std::lower_bound(next.begin(), next.end(), v);
        if (it == next.end() || *it != v) {
            throw InapplicableAction("operand " + v.str() + " not in state");
        }
        next.erase(it);
    };

    remove_one(action.x);
    remove_one(action.y);

    Rational r = action.result();
    next.insert(std::lower_bound(next.begin(), next.end(), r), std::move(r));
    return next;
}

bool is_goal(const NumberState& state, const Rational& target) {
    return state.size() == 1 && state[0] == target;
}

Step make_step(Op op, const Rational& x, const Rational& y) {
    return Step{x, op, y, apply_op(op, x, y)};
}

std::vector<Step> steps_from_actions(const std::vector<Action>& actions) {
    std::vector<Step> steps;
    steps.reserve(actions.size());
    for (const Action& a : actions) steps.push_back(make_step(a.op, a.x, a.y));
    return steps;
}

std::string format_step(const Step& step) {
    std::ostringstream os;
    os << step.x.str() << ' ' << op_symbol(step.op) << ' ' << step.y.str()
       << " = " << step.result.str();
    return os.str();
}

std::string format_solution(const std::vector<Step>& steps) {
    std::string out;
    for (const Step& s : steps) {
        out += format_step(s);
        out += '\n';
    }
    return out;
}

std::string_view gen_method_tag(GenMethod method) {
    switch (method) {
        case GenMethod::CD: return "cd";
        case GenMethod::RG: return "rg";
        case GenMethod::SoS: return "sos";
        case GenMethod::External: return "external";
    }
    return "external";
}

std::optional<GenMethod> gen_method_from_tag(std::string_view tag) {
    if (tag == "cd") return GenMethod::CD;
    if (tag == "rg") return GenMethod::RG;
    if (tag == "sos") return GenMethod::SoS;
    if (tag == "external") return GenMethod::External;
    return std::nullopt;
}

NumberState Instance::initial_state() const {
    std::vector<Rational> values;
    values.reserve(numbers.size());
    for (std::uint64_t n : numbers) values.emplace_back(n);
    return make_state(std::move(values));
}

}  // namespace countdown
