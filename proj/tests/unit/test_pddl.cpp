#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "countdown/model.hpp"
#include "countdown/pddl.hpp"

using namespace countdown;

namespace {

// True when `needle` appears as a contiguous token run inside `haystack`.
bool has_token_run(const std::vector<std::string>& haystack,
                   const std::vector<std::string>& needle) {
    return std::search(haystack.begin(), haystack.end(), needle.begin(),
                       needle.end()) != haystack.end();
}

std::size_t count_token(const std::vector<std::string>& tokens,
                        const std::string& token) {
    return std::count(tokens.begin(), tokens.end(), token);
}

Instance c01() {
    Instance inst;
    inst.id = "c01";
    inst.numbers = {3, 4, 5, 6};
    inst.target = 24;
    return inst;
}

}  // namespace

TEST_SUITE_BEGIN("pddl");

TEST_CASE("tokenizer splits parens and whitespace") {
    CHECK(pddl_tokens("(a (b c)) ") ==
          std::vector<std::string>{"(", "a", "(", "b", "c", ")", ")"});
    CHECK(pddl_tokens("(= (value n1) 3)") ==
          std::vector<std::string>{"(", "=", "(", "value", "n1", ")", "3", ")"});
    CHECK(pddl_tokens("\n  x\ty ").size() == 2);
    CHECK(pddl_tokens("").empty());
}

TEST_CASE("the domain is balanced and carries the five actions") {
    const auto tokens = pddl_tokens(emit_domain());
    CHECK(count_token(tokens, "(") == count_token(tokens, ")"));

    CHECK(has_token_run(tokens, {"(", "define", "(", "domain", "countdown", ")"}));
    for (const std::string& action :
         {"add", "subtract", "multiply", "divide", "checkgoal"}) {
        CHECK(has_token_run(tokens, {"(", ":action", action}));
    }
}

TEST_CASE("domain quirks survive verbatim") {
    const auto tokens = pddl_tokens(emit_domain());

    // the predicate parameter is the fused token ?o-num
    CHECK(has_token_run(tokens, {"(", ":predicates", "(", "active", "?o-num", ")",
                                 "(", "goalreached", ")", ")"}));
    // while the functions block spells ?o - num out
    CHECK(has_token_run(tokens, {"(", ":functions", "(", "value", "?o", "-",
                                 "num", ")"}));

    // subtract guards non-negativity before the active checks
    CHECK(has_token_run(tokens, {"(", "and", "(", "not", "(", "=", "?a", "?b",
                                 ")", ")", "(", ">=", "(", "value", "?a", ")",
                                 "(", "value", "?b", ")", ")"}));
    // divide puts the positivity guard first instead
    CHECK(has_token_run(tokens, {"(", "and", "(", ">", "(", "value", "?b", ")",
                                 "0", ")", "(", "active", "?a", ")"}));

    // add and subtract use increase/decrease, multiply and divide assign
    CHECK(has_token_run(tokens, {"(", "increase", "(", "value", "?a", ")", "(",
                                 "value", "?b", ")", ")"}));
    CHECK(has_token_run(tokens, {"(", "assign", "(", "value", "?a", ")", "(",
                                 "*", "(", "value", "?a", ")", "(", "value",
                                 "?b", ")", ")", ")"}));
    CHECK(has_token_run(tokens, {"(", "assign", "(", "value", "?a", ")", "(",
                                 "/", "(", "value", "?a", ")", "(", "value",
                                 "?b", ")", ")", ")"}));

    // checkgoal demands a single active number holding the target
    CHECK(has_token_run(tokens, {"(", "=", "(", "numactive", ")", "1", ")"}));
    CHECK(has_token_run(tokens, {"(", "=", "(", "value", "?a", ")", "(",
                                 "targetvalue", ")", ")"}));
    CHECK(has_token_run(tokens, {":effect", "(", "and", "(", "goalreached",
                                 ")", ")"}));
}

TEST_CASE("problems carry the instance verbatim, in stored order") {
    const auto tokens = pddl_tokens(emit_problem(c01(), "c01"));
    CHECK(count_token(tokens, "(") == count_token(tokens, ")"));

    CHECK(has_token_run(tokens, {"(", "problem", "c01", ")"}));
    CHECK(has_token_run(tokens, {"(", ":domain", "countdown", ")"}));
    CHECK(has_token_run(tokens,
                        {"(", ":objects", "n1", "n2", "n3", "n4", "-", "num", ")"}));
    CHECK(has_token_run(tokens, {"(", "=", "(", "value", "n1", ")", "3", ")"}));
    CHECK(has_token_run(tokens, {"(", "=", "(", "value", "n4", ")", "6", ")"}));
    CHECK(has_token_run(tokens, {"(", "=", "(", "targetvalue", ")", "24", ")"}));
    CHECK(has_token_run(tokens, {"(", "=", "(", "numactive", ")", "4", ")"}));
    for (const std::string& obj : {"n1", "n2", "n3", "n4"}) {
        CHECK(has_token_run(tokens, {"(", "active", obj, ")"}));
    }
    CHECK(has_token_run(tokens,
                        {"(", ":goal", "(", "and", "(", "goalreached", ")", ")", ")"}));
}

TEST_CASE("object order follows the stored numbers, not the sorted state") {
    Instance inst;
    inst.id = "rev";
    inst.numbers = {6, 5, 4, 3};
    inst.target = 24;
    const auto tokens = pddl_tokens(emit_problem(inst, "rev"));
    CHECK(has_token_run(tokens, {"(", "=", "(", "value", "n1", ")", "6", ")"}));
    CHECK(has_token_run(tokens, {"(", "=", "(", "value", "n4", ")", "3", ")"}));
}

TEST_CASE("the problem name parameter names the problem") {
    const auto tokens = pddl_tokens(emit_problem(c01(), "other-name"));
    CHECK(has_token_run(tokens, {"(", "problem", "other-name", ")"}));
}

TEST_SUITE_END();
