#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "countdown/model.hpp"

namespace countdown {

// The countdown planning domain: one num object per input, actions
// add/subtract/multiply/divide fold ?b into ?a and deactivate ?b, checkgoal
// fires once a single active number equals the target.
std::string emit_domain();

// Problem file for one instance. Objects n1..nk follow the stored number
// order; `name` becomes the problem name.
std::string emit_problem(const Instance& instance, std::string_view name);

// S-expression token stream: parentheses are their own tokens, everything
// else splits on whitespace. Two PDDL texts are equivalent iff their token
// streams match.
std::vector<std::string> pddl_tokens(std::string_view text);

}  // namespace countdown
