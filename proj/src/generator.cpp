#include "countdown/generator.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "countdown/errors.hpp"

namespace countdown {

namespace {

void check_config(const GenConfig& config) {
    if (config.n < 2) throw std::invalid_argument("instance size must be >= 2");
    if (config.input_range.lo > config.input_range.hi ||
        config.target_range.lo > config.target_range.hi) {
        throw std::invalid_argument("range lo must not exceed hi");
    }
    if (config.rollouts < 1) throw std::invalid_argument("rollouts must be >= 1");
    if (config.retry_cap < 1) throw std::invalid_argument("retry cap must be >= 1");
}

std::string hex_id(const char* tag, std::uint64_t seed) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%s-%016llx", tag,
                  static_cast<unsigned long long>(seed));
    return buf;
}

}  // namespace

std::vector<std::uint64_t> draw_numbers(Rng& rng, std::size_t n, Range input_range) {
    std::vector<std::uint64_t> numbers;
    numbers.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        numbers.push_back(rng.range(input_range.lo, input_range.hi));
    }
    return numbers;
}

Rollout integer_rollout(const std::vector<std::uint64_t>& numbers, Rng& rng) {
    if (numbers.size() < 2) {
        throw std::invalid_argument("rollout needs at least two numbers");
    }
    std::vector<Rational> values;
    values.reserve(numbers.size());
    for (std::uint64_t n : numbers) values.emplace_back(n);
    NumberState state = make_state(std::move(values));

    Rollout rollout;
    std::vector<Action> keep;
    while (state.size() > 1) {
        keep.clear();
        for (Action& a : legal_actions(state)) {
            if (a.op == Op::Div && !a.result().is_integer()) continue;
            keep.push_back(std::move(a));
        }
        const Action& pick = keep[rng.below(keep.size())];
        rollout.steps.push_back(make_step(pick.op, pick.x, pick.y));
        state = apply_action(state, pick);
    }
    rollout.target = state[0].num();  // integer closure keeps den = 1
    return rollout;
}

Instance generate_cd(const GenConfig& config) {
    check_config(config);
    Rng rng(config.seed);

    for (std::uint64_t attempt = 0; attempt < config.retry_cap; ++attempt) {
        std::vector<std::uint64_t> numbers =
            draw_numbers(rng, config.n, config.input_range);

        // Frequencies of in-range terminals; first witness per value kept.
        std::map<BigInt, std::pair<std::uint64_t, std::vector<Step>>> terminals;
        for (std::uint64_t r = 0; r < config.rollouts; ++r) {
            Rollout rollout = integer_rollout(numbers, rng);
            if (!config.target_range.contains(rollout.target)) continue;
            auto [it, fresh] = terminals.try_emplace(
                rollout.target, 0, std::vector<Step>{});
            ++it->second.first;
            if (fresh) it->second.second = std::move(rollout.steps);
        }
        if (terminals.empty()) continue;

        // Least frequent wins; map order already breaks ties by value.
        auto best = terminals.begin();
        for (auto it = terminals.begin(); it != terminals.end(); ++it) {
            if (it->second.first < best->second.first) best = it;
        }

        Instance instance;
        instance.id = hex_id("cd", config.seed);
        instance.numbers = std::move(numbers);
        instance.target = best->first.convert_to<std::uint64_t>();
        instance.generator = GenMethod::CD;
        instance.seed = config.seed;
        instance.witness = std::move(best->second.second);
        return instance;
    }
    throw RetriesExhausted("no rollout terminal in target range after " +
                           std::to_string(config.retry_cap) + " redraws");
}

Instance generate_rg(const GenConfig& config) {
    check_config(config);
    Rng rng(config.seed);

    for (std::uint64_t redraw = 0; redraw < config.retry_cap; ++redraw) {
        std::vector<std::uint64_t> numbers =
            draw_numbers(rng, config.n, config.input_range);

        for (std::uint64_t attempt = 0; attempt < config.retry_cap; ++attempt) {
            BigInt acc = numbers[0];
            std::vector<Step> steps;
            for (std::size_t i = 1; i < numbers.size(); ++i) {
                const BigInt next = numbers[i];
                Op options[4];
                std::size_t count = 0;
                options[count++] = Op::Add;
                options[count++] = Op::Mul;
                if (acc >= next) options[count++] = Op::Sub;
                if (next > 0 && acc % next == 0) options[count++] = Op::Div;
                Op op = options[rng.below(count)];
                Step step = make_step(op, Rational(acc, 1), Rational(next, 1));
                acc = step.result.num();
                steps.push_back(std::move(step));
            }
            if (config.target_range.contains(acc)) {
                Instance instance;
                instance.id = hex_id("rg", config.seed);
                instance.numbers = std::move(numbers);
                instance.target = acc.convert_to<std::uint64_t>();
                instance.generator = GenMethod::RG;
                instance.seed = config.seed;
                instance.witness = std::move(steps);
                return instance;
            }
        }
    }
    throw RetriesExhausted("no in-range fold after " +
                           std::to_string(config.retry_cap) + " redraws");
}

namespace {

// All (op, a, b) with op(a, b) = v and a, b inside the input range, in
// canonical operator order.
struct Split {
    Op op;
    std::uint64_t a;
    std::uint64_t b;
};

std::vector<Split> splits_of(std::uint64_t v, Range range) {
    std::vector<Split> out;
    const std::uint64_t lo = range.lo;
    const std::uint64_t hi = range.hi;

    // a + b = v, a <= b
    if (v >= 2 * lo) {
        std::uint64_t a_lo = std::max(lo, v > hi ? v - hi : lo);
        for (std::uint64_t a = a_lo; a <= v / 2; ++a) {
            std::uint64_t b = v - a;
            if (b >= lo && b <= hi && a <= hi) out.push_back({Op::Add, a, b});
        }
    }
    // a * b = v, a <= b
    if (v == 0) {
        if (lo == 0) {
            for (std::uint64_t b = lo; b <= hi; ++b) out.push_back({Op::Mul, 0, b});
        }
    } else {
        for (std::uint64_t a = std::max<std::uint64_t>(lo, 1); a * a <= v; ++a) {
            if (v % a != 0) continue;
            std::uint64_t b = v / a;
            if (a <= hi && b >= lo && b <= hi) out.push_back({Op::Mul, a, b});
        }
    }
    // a - b = v
    {
        std::uint64_t a_lo = std::max(lo, v + lo);
        std::uint64_t a_hi = std::min(hi, v <= hi ? v + hi : hi);
        for (std::uint64_t a = a_lo; a <= a_hi && a >= v; ++a) {
            std::uint64_t b = a - v;
            if (b >= lo && b <= hi) out.push_back({Op::Sub, a, b});
        }
    }
    // a / b = v, exact division, b > 0
    for (std::uint64_t b = std::max<std::uint64_t>(lo, 1); b <= hi; ++b) {
        if (v != 0 && b > hi / v) break;  // a = v * b would overflow the range
        std::uint64_t a = v * b;
        if (a >= lo && a <= hi) out.push_back({Op::Div, a, b});
    }
    return out;
}

struct SosNode {
    std::vector<std::uint64_t> values;  // sorted ascending
    std::vector<Step> chain;            // backward splits, in split order
};

}  // namespace

Instance generate_sos(const GenConfig& config) {
    check_config(config);
    if (config.n > kSosSizeCap) {
        throw SizeCapExceeded("backward generation capped at size " +
                              std::to_string(kSosSizeCap));
    }
    Rng rng(config.seed);

    for (std::uint64_t attempt = 0; attempt < config.retry_cap; ++attempt) {
        const std::uint64_t target =
            rng.range(config.target_range.lo, config.target_range.hi);

        std::vector<SosNode> frontier;
        frontier.push_back({{target}, {}});
        std::uint64_t generated = 0;
        bool dead = false;

        for (std::size_t depth = 1; depth + 1 <= config.n && !dead; ++depth) {
            std::vector<SosNode> sampled;
            std::uint64_t seen = 0;

            for (const SosNode& node : frontier) {
                std::uint64_t prev = 0;
                bool first = true;
                for (std::size_t pos = 0; pos < node.values.size(); ++pos) {
                    const std::uint64_t v = node.values[pos];
                    if (!first && v == prev) continue;  // same splits as last run
                    first = false;
                    prev = v;
                    for (const Split& split : splits_of(v, config.input_range)) {
                        if (++generated > config.sos_node_budget) {
                            throw RetriesExhausted(
                                "backward node budget exhausted at size " +
                                std::to_string(config.n));
                        }
                        ++seen;
                        // Reservoir sampling keeps each candidate child with
                        // equal probability without materializing the level.
                        std::size_t slot = sampled.size();
                        if (slot >= config.sos_frontier_cap) {
                            std::uint64_t r = rng.below(seen);
                            if (r >= config.sos_frontier_cap) continue;
                            slot = static_cast<std::size_t>(r);
                        }

                        SosNode child;
                        child.values = node.values;
                        child.values.erase(child.values.begin() +
                                           static_cast<std::ptrdiff_t>(pos));
                        child.values.insert(
                            std::lower_bound(child.values.begin(),
                                             child.values.end(), split.a),
                            split.a);
                        child.values.insert(
                            std::lower_bound(child.values.begin(),
                                             child.values.end(), split.b),
                            split.b);
                        child.chain = node.chain;
                        child.chain.push_back(make_step(
                            split.op, Rational(split.a), Rational(split.b)));

                        if (slot == sampled.size()) {
                            sampled.push_back(std::move(child));
                        } else {
                            sampled[slot] = std::move(child);
                        }
                    }
                }
            }
            if (sampled.empty()) {
                dead = true;
            } else {
                frontier = std::move(sampled);
            }
        }
        if (dead) continue;

        const SosNode& pick = frontier[rng.below(frontier.size())];
        Instance instance;
        instance.id = hex_id("sos", config.seed);
        instance.numbers = pick.values;
        instance.target = target;
        instance.generator = GenMethod::SoS;
        instance.seed = config.seed;
        std::vector<Step> witness(pick.chain.rbegin(), pick.chain.rend());
        instance.witness = std::move(witness);
        return instance;
    }
    throw RetriesExhausted("no size-" + std::to_string(config.n) +
                           " preimage found for any sampled target");
}

Instance generate_one(GenMethod method, const GenConfig& config) {
    switch (method) {
        case GenMethod::CD: return generate_cd(config);
        case GenMethod::RG: return generate_rg(config);
        case GenMethod::SoS: return generate_sos(config);
        case GenMethod::External: break;
    }
    throw std::invalid_argument("cannot generate instances tagged external");
}

std::vector<Instance> generate_dataset(GenMethod method, const GenConfig& config,
                                       std::size_t count,
                                       const std::vector<std::size_t>& sizes) {
    std::vector<Instance> dataset;
    dataset.reserve(count * sizes.size());
    for (std::size_t size : sizes) {
        for (std::size_t i = 0; i < count; ++i) {
            GenConfig per = config;
            per.n = size;
            per.seed = mix_seed(config.seed, size, i);
            Instance instance = generate_one(method, per);

            char buf[64];
            std::snprintf(buf, sizeof buf, "%s-n%02zu-%03zu",
                          std::string(gen_method_tag(method)).c_str(), size, i);
            instance.id = buf;
            dataset.push_back(std::move(instance));
        }
    }
    return dataset;
}

}  // namespace countdown
