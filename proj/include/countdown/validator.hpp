#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "countdown/model.hpp"

namespace countdown {

enum class ErrorCategory : std::uint8_t {
    IncorrectFormat,
    FewerSteps,
    MoreSteps,
    NotAllInputsUsed,
    NotTargetNumber,
    IncorrectOperator,
    UnknownNumberUsed,
};

std::string_view error_category_name(ErrorCategory category);

struct StepNote {
    std::size_t line;  // 1-based line number in the original text
    ErrorCategory category;
    std::string message;
};

struct ValidationReport {
    std::set<ErrorCategory> errors;
    std::vector<StepNote> per_step_notes;
    // Present iff the text fully parses under the strict grammar. Declared
    // results are taken verbatim; validate() checks them against the ops.
    std::optional<std::vector<Step>> parsed;

    bool valid() const { return errors.empty(); }
};

// Strict grammar: one step per line, `<x> <op> <y> = <r>`, operands and
// result in rational text form, op one of + - * /. Blank lines and
// surrounding whitespace are ignored. Any malformed line makes the whole
// parse absent.
std::optional<std::vector<Step>> parse_solution(std::string_view text);

// Classifies every violation of a candidate solution. Simulation runs over a
// working multiset seeded with the instance numbers and pushes on past
// errors: a step with an unavailable operand consumes nothing but still
// contributes its declared result, so later steps stay checkable; a step
// with an unknown (but operator-shaped) symbol consumes its operands and
// skips the arithmetic check. Operand consumption counts against the
// original inputs first, which makes NotAllInputsUsed exact.
ValidationReport validate(const Instance& instance, std::string_view text);

}  // namespace countdown
