#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "countdown/rational.hpp"

namespace countdown {

// Declaration order doubles as the canonical sort order of actions, chosen so
// that "sorted by (op, x, y)" lists Add before Mul before Sub before Div.
enum class Op : std::uint8_t { Add, Mul, Sub, Div };

inline constexpr std::array<Op, 4> kAllOps{Op::Add, Op::Mul, Op::Sub, Op::Div};

char op_symbol(Op op);
std::optional<Op> op_from_symbol(std::string_view token);

// Exact result of o(x, y). Throws NegativeResult / DivisionByZero when the
// operation leaves the value domain.
Rational apply_op(Op op, const Rational& x, const Rational& y);

// x is always the left operand. Canonical forms: x <= y for Add/Mul,
// x >= y for Sub, y > 0 for Div.
struct Action {
    Op op;
    Rational x;
    Rational y;

    Rational result() const { return apply_op(op, x, y); }

    bool operator==(const Action& rhs) const {
        return op == rhs.op && x == rhs.x && y == rhs.y;
    }
};

// Multiset of values, kept sorted ascending so equal multisets compare and
// hash identically.
using NumberState = std::vector<Rational>;

NumberState make_state(std::vector<Rational> values);
std::size_t state_hash(const NumberState& state);

// All canonical actions over unordered value pairs of the state, in
// deterministic (op, x, y) order. A pair of equal values needs that value at
// multiplicity >= 2 and contributes one canonical action per operator.
std::vector<Action> legal_actions(const NumberState& state);

// s' = s \ {x, y} + {o(x,y)}, removing one occurrence per operand. Throws
// InapplicableAction when the operands are not available.
NumberState apply_action(const NumberState& state, const Action& action);

bool is_goal(const NumberState& state, const Rational& target);

// One line of a solution: x op y = result.
struct Step {
    Rational x;
    Op op;
    Rational y;
    Rational result;

    bool operator==(const Step& rhs) const {
        return x == rhs.x && op == rhs.op && y == rhs.y && result == rhs.result;
    }
};

Step make_step(Op op, const Rational& x, const Rational& y);
std::vector<Step> steps_from_actions(const std::vector<Action>& actions);

std::string format_step(const Step& step);
// One step per line, trailing newline. Empty for an empty solution.
std::string format_solution(const std::vector<Step>& steps);

enum class GenMethod : std::uint8_t { CD, RG, SoS, External };

std::string_view gen_method_tag(GenMethod method);
std::optional<GenMethod> gen_method_from_tag(std::string_view tag);

// A puzzle: combine every number exactly once to reach the target. The
// numbers keep their stored (drawn) order; sorting happens when a search
// state is built from them.
struct Instance {
    std::string id;
    std::vector<std::uint64_t> numbers;
    std::uint64_t target = 0;
    GenMethod generator = GenMethod::External;
    std::uint64_t seed = 0;
    std::optional<std::vector<Step>> witness;

    std::size_t size() const { return numbers.size(); }
    NumberState initial_state() const;
    Rational target_value() const { return Rational(target); }
};

}  // namespace countdown
