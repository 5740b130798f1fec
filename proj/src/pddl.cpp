#include "countdown/pddl.hpp"

#include <cctype>
#include <sstream>

namespace countdown {

std::string emit_domain() {
    // The ?o-num parameter name in :predicates is deliberate; changing it to
    // "?o - num" would alter the token stream this emitter is pinned to.
    return R"((define (domain countdown)
  (:types num - object)
  (:predicates (active ?o-num) (goalreached))
  (:functions (value ?o - num) (targetvalue) (numactive))
  (:action add
   :parameters (?a ?b - num)
   :precondition (and (not (= ?a ?b)) (active ?a) (active ?b))
   :effect (and (decrease (numactive) 1)
                (increase (value ?a) (value ?b))
                (not (active ?b))))
  (:action subtract
   :parameters (?a ?b - num)
   :precondition (and (not (= ?a ?b)) (>= (value ?a) (value ?b)) (active ?a) (active ?b))
   :effect (and (decrease (numactive) 1)
                (decrease (value ?a) (value ?b))
                (not (active ?b))))
  (:action multiply
   :parameters (?a ?b - num)
   :precondition (and (not (= ?a ?b)) (active ?a) (active ?b))
   :effect (and (decrease (numactive) 1)
                (assign (value ?a) (* (value ?a) (value ?b)))
                (not (active ?b))))
  (:action divide
   :parameters (?a ?b - num)
   :precondition (and (> (value ?b) 0) (active ?a) (active ?b) (not (= ?a ?b)))
   :effect (and (decrease (numactive) 1)
                (assign (value ?a) (/ (value ?a) (value ?b)))
                (not (active ?b))))
  (:action checkgoal
   :parameters (?a - num)
   :precondition (and (= (numactive) 1) (active ?a) (= (value ?a) (targetvalue)))
   :effect (and (goalreached)))
)
)";
}

std::string emit_problem(const Instance& instance, std::string_view name) {
    const std::size_t n = instance.size();
    std::ostringstream os;
    os << "(define (problem " << name << ")\n";
    os << "  (:domain countdown)\n";
    os << "  (:objects";
    for (std::size_t i = 1; i <= n; ++i) os << " n" << i;
    os << " - num)\n";
    os << "  (:init\n";
    for (std::size_t i = 0; i < n; ++i) {
        os << "    (= (value n" << (i + 1) << ") " << instance.numbers[i] << ")\n";
    }
    os << "    (= (targetvalue) " << instance.target << ")\n";
    os << "    (= (numactive) " << n << ")\n";
    os << "   ";
    for (std::size_t i = 1; i <= n; ++i) os << " (active n" << i << ")";
    os << ")\n";
    os << "  (:goal (and (goalreached)))\n";
    os << ")\n";
    return os.str();
}

std::vector<std::string> pddl_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(current);
            current.clear();
        }
    };
    for (char c : text) {
        if (c == '(' || c == ')') {
            flush();
            tokens.emplace_back(1, c);
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            current.push_back(c);
        }
    }
    flush();
    return tokens;
}

}  // namespace countdown
