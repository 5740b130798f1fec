#include "countdown/counter.hpp"

#include <chrono>

#include "engine.hpp"

namespace countdown {

namespace {

using Clock = std::chrono::steady_clock;

class CountWalk {
public:
    CountWalk(const Instance& instance, const Budget& budget)
        : budget_(budget), start_(Clock::now()), cache_(table_) {
        root_ = engine::intern_state(instance.initial_state(), table_);
        target_ = table_.intern(instance.target_value());
        frames_.resize(instance.size() + 1);
    }

    CountResult run() {
        CountResult result;
        if (root_.size() == 1) {
            result.count = (root_[0] == target_) ? 1 : 0;
        } else if (root_.size() >= 2) {
            walk(root_, 0);
            result.count = count_;
            result.complete = !stopped_;
        }
        result.expansions = expansions_;
        result.elapsed_millis =
            std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        return result;
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
    engine::IdState root_;
    engine::ValueId target_ = engine::kNoValue;
    std::vector<Frame> frames_;
    BigInt count_ = 0;
    std::uint64_t expansions_ = 0;
    bool stopped_ = false;

    bool over_budget() {
        if (expansions_ >= budget_.max_expansions) return true;
        if ((expansions_ & 4095) == 0) {
            double elapsed =
                std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
            if (elapsed >= static_cast<double>(budget_.max_millis)) return true;
        }
        return false;
    }

    void walk(const engine::IdState& state, std::size_t depth) {
        if (over_budget()) {
            stopped_ = true;
            return;
        }
        ++expansions_;

        Frame& frame = frames_[depth];
        engine::expand(state, cache_, frame.actions);
        for (const engine::IdAction& action : frame.actions) {
            engine::make_child(state, action, table_, frame.child);
            if (frame.child.size() == 1) {
                if (frame.child[0] == target_) ++count_;
            } else {
                walk(frame.child, depth + 1);
                if (stopped_) return;
            }
        }
    }
};

}  // namespace

CountResult count_solutions(const Instance& instance, const Budget& budget) {
    return CountWalk(instance, budget).run();
}

}  // namespace countdown
