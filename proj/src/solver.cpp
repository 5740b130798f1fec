#include "countdown/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <unordered_set>

#include "engine.hpp"

namespace countdown {

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Depth-first traversal state. Children are generated in canonical action
// order; a child is pushed before being expanded, so the visited set equals
// "states ever seen", and re-running with a larger budget replays the exact
// same prefix.
class DfsSearch {
public:
    DfsSearch(const Instance& instance, const Budget& budget)
        : budget_(budget), start_(Clock::now()), cache_(table_) {
        root_ = engine::intern_state(instance.initial_state(), table_);
        target_ = table_.intern(instance.target_value());
        frames_.resize(instance.size() + 1);
    }

    SolveOutcome run() {
        SolveOutcome out;
        visited_.insert(root_);
        if (root_.size() == 1 && root_[0] == target_) {
            out.status = SolveStatus::Solved;
            out.solution = std::vector<Step>{};
            finish(out);
            return out;
        }
        recurse(root_, 0);
        if (solved_) {
            out.status = SolveStatus::Solved;
            std::vector<Step> steps;
            steps.reserve(path_.size());
            for (const engine::IdAction& a : path_) {
                steps.push_back(Step{table_.value(a.x), a.op, table_.value(a.y),
                                     table_.value(a.result)});
            }
            out.solution = std::move(steps);
        } else if (stopped_) {
            out.status = SolveStatus::BudgetExceeded;
        } else {
            out.status = SolveStatus::ExhaustedUnsolvable;
        }
        finish(out);
        return out;
    }

private:
    struct Frame {
        std::vector<engine::IdAction> actions;
        engine::IdState child;
    };

    const Budget budget_;
    Clock::time_point start_;
    engine::ValueTable table_;
    engine::PairOpsCache cache_;
    engine::StateSet visited_;
    engine::IdState root_;
    engine::ValueId target_ = engine::kNoValue;
    std::vector<Frame> frames_;
    std::vector<engine::IdAction> path_;
    std::uint64_t expansions_ = 0;
    std::uint64_t generated_ = 0;
    bool solved_ = false;
    bool stopped_ = false;

    void finish(SolveOutcome& out) {
        out.stats.expansions = expansions_;
        out.stats.generated = generated_;
        out.stats.peak_frontier = visited_.size();
        out.stats.elapsed_millis = millis_since(start_);
    }

    bool over_budget() {
        if (expansions_ >= budget_.max_expansions) return true;
        if (visited_.size() >= budget_.max_frontier) return true;
        if ((expansions_ & 1023) == 0 && millis_since(start_) >= static_cast<double>(budget_.max_millis)) {
            return true;
        }
        return false;
    }

    void recurse(const engine::IdState& state, std::size_t depth) {
        if (over_budget()) {
            stopped_ = true;
            return;
        }
        ++expansions_;

        Frame& frame = frames_[depth];
        engine::expand(state, cache_, frame.actions);
        for (const engine::IdAction& action : frame.actions) {
            ++generated_;
            engine::make_child(state, action, table_, frame.child);
            if (frame.child.size() == 1 && frame.child[0] == target_) {
                path_.push_back(action);
                solved_ = true;
                return;
            }
            if (frame.child.size() > 1 && visited_.insert(frame.child)) {
                path_.push_back(action);
                recurse(frame.child, depth + 1);
                if (solved_ || stopped_) return;
                path_.pop_back();
            }
        }
    }
};

}  // namespace

std::string_view solve_status_tag(SolveStatus status) {
    switch (status) {
        case SolveStatus::Solved: return "solved";
        case SolveStatus::ExhaustedUnsolvable: return "exhausted_unsolvable";
        case SolveStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "budget_exceeded";
}

std::optional<SolveStatus> solve_status_from_tag(std::string_view tag) {
    if (tag == "solved") return SolveStatus::Solved;
    if (tag == "exhausted_unsolvable") return SolveStatus::ExhaustedUnsolvable;
    if (tag == "budget_exceeded") return SolveStatus::BudgetExceeded;
    return std::nullopt;
}

SolveOutcome dfs_solve(const Instance& instance, const Budget& budget) {
    return DfsSearch(instance, budget).run();
}

double default_heuristic(const NumberState& state, const Rational& target) {
    if (state.empty()) return 0;
    double best = std::numeric_limits<double>::infinity();
    for (const Rational& v : state) {
        best = std::min(best, Rational::abs_diff(v, target).to_double());
    }
    if (!std::isfinite(best)) best = 0;
    return static_cast<double>(state.size() - 1) + best / (1.0 + best);
}

namespace {

struct StateHasher {
    std::size_t operator()(const NumberState& s) const { return state_hash(s); }
};

struct GbfsNode {
    NumberState state;
    std::int64_t parent = -1;
    Step step;  // action that produced this node (undefined for the root)
};

struct QueueEntry {
    double h;
    std::uint64_t seq;
    std::size_t node;

    bool operator>(const QueueEntry& rhs) const {
        if (h != rhs.h) return h > rhs.h;
        return seq > rhs.seq;
    }
};

}  // namespace

SolveOutcome gbfs_solve(const Instance& instance, const Heuristic& heuristic,
                        const Budget& budget) {
    const auto start = Clock::now();
    const Rational target = instance.target_value();

    SolveOutcome out;
    std::vector<GbfsNode> nodes;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> open;
    std::unordered_set<NumberState, StateHasher> closed;
    std::uint64_t seq = 0;
    std::uint64_t peak_open = 0;

    auto push = [&](NumberState state, std::int64_t parent, const Step& step) {
        double h = heuristic(state, target);
        nodes.push_back(GbfsNode{std::move(state), parent, step});
        open.push(QueueEntry{h, seq++, nodes.size() - 1});
        peak_open = std::max<std::uint64_t>(peak_open, open.size());
    };

    push(instance.initial_state(), -1, Step{});

    bool stopped = false;
    std::int64_t goal_node = -1;
    while (!open.empty()) {
        if (out.stats.expansions >= budget.max_expansions ||
            closed.size() + open.size() >= budget.max_frontier) {
            stopped = true;
            break;
        }
        if ((out.stats.expansions & 255) == 0 &&
            millis_since(start) >= static_cast<double>(budget.max_millis)) {
            stopped = true;
            break;
        }

        const std::size_t index = open.top().node;
        open.pop();
        if (!closed.insert(nodes[index].state).second) continue;

        if (is_goal(nodes[index].state, target)) {
            goal_node = static_cast<std::int64_t>(index);
            break;
        }

        ++out.stats.expansions;
        // Copy: push() grows `nodes` and may reallocate from under a reference.
        const NumberState state = nodes[index].state;
        for (const Action& action : legal_actions(state)) {
            ++out.stats.generated;
            NumberState child = apply_action(state, action);
            if (closed.count(child)) continue;
            push(std::move(child), static_cast<std::int64_t>(index),
                 make_step(action.op, action.x, action.y));
        }
    }

    if (goal_node >= 0) {
        out.status = SolveStatus::Solved;
        std::vector<Step> steps;
        for (std::int64_t i = goal_node; nodes[i].parent >= 0; i = nodes[i].parent) {
            steps.push_back(nodes[i].step);
        }
        std::reverse(steps.begin(), steps.end());
        out.solution = std::move(steps);
    } else if (stopped) {
        out.status = SolveStatus::BudgetExceeded;
    } else {
        out.status = SolveStatus::ExhaustedUnsolvable;
    }
    out.stats.peak_frontier = peak_open + closed.size();
    out.stats.elapsed_millis = millis_since(start);
    return out;
}

SolveOutcome gbfs_solve(const Instance& instance, const Budget& budget) {
    return gbfs_solve(instance, Heuristic(&default_heuristic), budget);
}

}  // namespace countdown
