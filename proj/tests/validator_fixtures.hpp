#pragma once

// Crafted solution texts with exact expected category sets, shared by the
// unit suite and the acceptance gate. Categories are not mutually exclusive;
// each fixture pins the exact set. Two categories cannot occur alone: s steps
// consume 2s values while only n originals plus s-1 earlier intermediates
// exist, and 2s > n + s - 1 whenever s > n - 1, so MoreSteps always drags in
// UnknownNumberUsed; by the same budget, n-1 fully-available steps consume at
// least n originals, so NotAllInputsUsed needs an unavailable operand too.

#include <set>
#include <vector>

#include "countdown/model.hpp"
#include "countdown/validator.hpp"

namespace fixtures {

struct ValidatorFixture {
    const char* name;
    countdown::Instance instance;
    const char* text;
    std::set<countdown::ErrorCategory> expected;
};

inline std::vector<ValidatorFixture> validator_fixtures() {
    using countdown::ErrorCategory;
    using countdown::Instance;

    auto instance_of = [](std::vector<std::uint64_t> numbers,
                          std::uint64_t target) {
        Instance inst;
        inst.id = "fixture";
        inst.numbers = std::move(numbers);
        inst.target = target;
        return inst;
    };

    const Instance c24 = instance_of({3, 4, 5, 6}, 24);

    return {
        {"valid three-step solution", c24,
         "3 + 5 = 8\n8 - 4 = 4\n4 * 6 = 24\n",
         {}},

        {"valid with rational intermediates", instance_of({3, 3, 8, 8}, 24),
         "8 / 3 = 8/3\n3 - 8/3 = 1/3\n8 / 1/3 = 24\n",
         {}},

        {"valid despite ragged whitespace", c24,
         "\n  3 +    5 =  8\n\n8 - 4 =\t4\n4 * 6 = 24",
         {}},

        {"misstated results alone are a format error", c24,
         "3 + 5 = 9\n9 - 4 = 4\n4 * 6 = 24\n",
         {ErrorCategory::IncorrectFormat}},

        {"all inputs in too few steps", c24,
         "3 + 5 = 8\n4 * 6 = 24\n",
         {ErrorCategory::FewerSteps}},

        {"extra step can only feed on unavailable values", c24,
         "3 + 5 = 8\n8 - 4 = 4\n4 * 6 = 24\n24 + 0 = 24\n",
         {ErrorCategory::MoreSteps, ErrorCategory::UnknownNumberUsed}},

        {"skipping an input needs an unknown stand-in", c24,
         "3 + 5 = 8\n8 * 6 = 48\n48 / 2 = 24\n",
         {ErrorCategory::NotAllInputsUsed, ErrorCategory::UnknownNumberUsed}},

        {"clean arithmetic to the wrong number", c24,
         "3 + 5 = 8\n8 + 4 = 12\n12 + 6 = 18\n",
         {ErrorCategory::NotTargetNumber}},

        {"unsupported operator symbol", c24,
         "3 % 5 = 8\n8 - 4 = 4\n4 * 6 = 24\n",
         {ErrorCategory::IncorrectOperator}},

        {"duplicate operand without the multiplicity", c24,
         "3 + 3 = 6\n5 - 3 = 2\n4 * 6 = 24\n",
         {ErrorCategory::UnknownNumberUsed}},

        {"spending an intermediate twice", c24,
         "3 + 5 = 8\n8 - 4 = 4\n8 * 6 = 48\n",
         {ErrorCategory::UnknownNumberUsed, ErrorCategory::NotAllInputsUsed,
          ErrorCategory::NotTargetNumber}},

        {"empty text", c24, "",
         {ErrorCategory::FewerSteps, ErrorCategory::NotAllInputsUsed}},

        {"unparseable line", c24, "hello world\n",
         {ErrorCategory::IncorrectFormat, ErrorCategory::FewerSteps,
          ErrorCategory::NotAllInputsUsed}},

        {"worded operator is not operator-shaped", c24,
         "3 plus 5 = 8\n",
         {ErrorCategory::IncorrectFormat, ErrorCategory::FewerSteps,
          ErrorCategory::NotAllInputsUsed}},

        {"division by a derived zero", instance_of({2, 2, 5, 10}, 50),
         "2 - 2 = 0\n5 / 0 = 5\n5 * 10 = 50\n",
         {ErrorCategory::IncorrectFormat}},

        {"negative subtraction stays in the format bucket",
         instance_of({3, 4, 5, 6}, 0),
         "3 - 6 = 0\n0 * 4 = 0\n0 * 5 = 0\n",
         {ErrorCategory::IncorrectFormat}},

        {"one line can trip five categories", c24,
         "7 % 3 = 99\n",
         {ErrorCategory::IncorrectOperator, ErrorCategory::UnknownNumberUsed,
          ErrorCategory::FewerSteps, ErrorCategory::NotAllInputsUsed,
          ErrorCategory::NotTargetNumber}},

        {"wrong result and wrong final number", c24,
         "3 / 5 = 2/3\n2/3 * 6 = 4\n4 * 4 = 16\n",
         {ErrorCategory::IncorrectFormat, ErrorCategory::NotTargetNumber}},
    };
}

}  // namespace fixtures
