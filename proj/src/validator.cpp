#include "countdown/validator.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "countdown/errors.hpp"

namespace countdown {

std::string_view error_category_name(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::IncorrectFormat: return "IncorrectFormat";
        case ErrorCategory::FewerSteps: return "FewerSteps";
        case ErrorCategory::MoreSteps: return "MoreSteps";
        case ErrorCategory::NotAllInputsUsed: return "NotAllInputsUsed";
        case ErrorCategory::NotTargetNumber: return "NotTargetNumber";
        case ErrorCategory::IncorrectOperator: return "IncorrectOperator";
        case ErrorCategory::UnknownNumberUsed: return "UnknownNumberUsed";
    }
    return "IncorrectFormat";
}

namespace {

struct Line {
    std::size_t number = 0;  // 1-based
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<Line> nonblank_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        std::string_view line = trim(text.substr(pos, end - pos));
        if (!line.empty()) lines.push_back({lineno, line});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

// Something an operator could plausibly look like: one or two symbol
// characters. "%" or "^" land in IncorrectOperator; a word like "plus" does
// not pass as an operator and the line stays a format error.
bool operator_shaped(std::string_view token) {
    if (token.empty() || token.size() > 2) return false;
    constexpr std::string_view symbols = "+-*/%^|&~<>=!.:";
    return std::all_of(token.begin(), token.end(),
                       [&](char c) { return symbols.find(c) != std::string_view::npos; });
}

// Lenient per-line reading used by validate(): keeps the step usable when
// only the operator symbol is unrecognized.
struct LenientStep {
    std::size_t line = 0;
    Rational x, y, declared;
    std::optional<Op> op;
    std::string op_token;
};

struct LenientParse {
    std::vector<LenientStep> steps;
    std::vector<StepNote> notes;  // format errors for unusable lines
};

LenientParse parse_leniently(const std::vector<Line>& lines) {
    LenientParse out;
    for (const Line& line : lines) {
        auto fields = split_fields(line.text);
        auto reject = [&](const std::string& why) {
            out.notes.push_back({line.number, ErrorCategory::IncorrectFormat,
                                 "line " + std::to_string(line.number) + ": " + why});
        };
        if (fields.size() != 5 || fields[3] != "=") {
            reject("expected '<x> <op> <y> = <r>'");
            continue;
        }
        auto x = Rational::parse(fields[0]);
        auto y = Rational::parse(fields[2]);
        auto r = Rational::parse(fields[4]);
        if (!x || !y || !r) {
            reject("operands and result must be non-negative rationals");
            continue;
        }
        std::optional<Op> op = op_from_symbol(fields[1]);
        if (!op && !operator_shaped(fields[1])) {
            reject("unrecognized token '" + std::string(fields[1]) + "'");
            continue;
        }
        out.steps.push_back({line.number, std::move(*x), std::move(*y),
                             std::move(*r), op, std::string(fields[1])});
    }
    return out;
}

// Working multiset with originals-first consumption accounting.
class WorkingSet {
public:
    explicit WorkingSet(const std::vector<std::uint64_t>& numbers) {
        for (std::uint64_t n : numbers) {
            Rational v(n);
            ++available_[v];
            ++originals_[v];
        }
    }

    bool pair_available(const Rational& x, const Rational& y) const {
        auto it = available_.find(x);
        if (it == available_.end() || it->second == 0) return false;
        std::size_t need_y = (x == y) ? 2 : 1;
        auto jt = available_.find(y);
        return jt != available_.end() && jt->second >= need_y;
    }

    void consume(const Rational& v) {
        --available_[v];
        auto it = originals_.find(v);
        if (it != originals_.end() && it->second > 0) --it->second;
    }

    void produce(const Rational& v) { ++available_[v]; }

    bool all_originals_consumed() const {
        for (const auto& [v, count] : originals_) {
            if (count > 0) return false;
        }
        return true;
    }

private:
    std::map<Rational, std::size_t> available_;
    std::map<Rational, std::size_t> originals_;
};

}  // namespace

std::optional<std::vector<Step>> parse_solution(std::string_view text) {
    std::vector<Step> steps;
    for (const Line& line : nonblank_lines(text)) {
        auto fields = split_fields(line.text);
        if (fields.size() != 5 || fields[3] != "=") return std::nullopt;
        auto x = Rational::parse(fields[0]);
        auto op = op_from_symbol(fields[1]);
        auto y = Rational::parse(fields[2]);
        auto r = Rational::parse(fields[4]);
        if (!x || !op || !y || !r) return std::nullopt;
        steps.push_back(Step{std::move(*x), *op, std::move(*y), std::move(*r)});
    }
    return steps;
}

ValidationReport validate(const Instance& instance, std::string_view text) {
    ValidationReport report;
    report.parsed = parse_solution(text);

    const auto lines = nonblank_lines(text);
    LenientParse parsed = parse_leniently(lines);
    report.per_step_notes = std::move(parsed.notes);

    WorkingSet working(instance.numbers);
    const Rational target = instance.target_value();

    auto note = [&](std::size_t line, ErrorCategory cat, std::string message) {
        report.per_step_notes.push_back(
            {line, cat, "line " + std::to_string(line) + ": " + std::move(message)});
    };

    for (const LenientStep& step : parsed.steps) {
        if (!step.op) {
            note(step.line, ErrorCategory::IncorrectOperator,
                 "operator '" + step.op_token + "' is not one of + - * /");
        }

        if (!working.pair_available(step.x, step.y)) {
            note(step.line, ErrorCategory::UnknownNumberUsed,
                 "operands " + step.x.str() + ", " + step.y.str() +
                     " not both available");
        } else {
            working.consume(step.x);
            working.consume(step.y);
            if (step.op) {
                try {
                    Rational actual = apply_op(*step.op, step.x, step.y);
                    if (actual != step.declared) {
                        note(step.line, ErrorCategory::IncorrectFormat,
                             format_step(Step{step.x, *step.op, step.y, step.declared}) +
                                 " misstates the result (" + actual.str() + ")");
                    }
                } catch (const std::domain_error&) {
                    note(step.line, ErrorCategory::IncorrectFormat,
                         "operation undefined over the value domain");
                }
            }
        }
        // The declared value enters the pool either way so later steps that
        // build on it are still checked on their own terms.
        working.produce(step.declared);
    }

    const std::size_t expected = instance.size() >= 1 ? instance.size() - 1 : 0;
    if (parsed.steps.size() < expected) {
        report.errors.insert(ErrorCategory::FewerSteps);
    } else if (parsed.steps.size() > expected) {
        report.errors.insert(ErrorCategory::MoreSteps);
    }
    if (!working.all_originals_consumed()) {
        report.errors.insert(ErrorCategory::NotAllInputsUsed);
    }
    if (!parsed.steps.empty() && parsed.steps.back().declared != target) {
        report.errors.insert(ErrorCategory::NotTargetNumber);
    }
    for (const StepNote& n : report.per_step_notes) report.errors.insert(n.category);
    return report;
}

}  // namespace countdown
