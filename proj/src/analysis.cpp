#include "countdown/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace countdown {

std::uint64_t branching_bound(std::uint64_t k) {
    if (k < 2) throw std::domain_error("branching bound needs k >= 2");
    return 3 * k * (k - 1);
}

namespace {

BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_layer_args(std::size_t n, std::size_t j) {
    if (n < 2) throw std::domain_error("layer bound needs n >= 2");
    if (j < 1 || j > n) throw std::domain_error("layer index out of [1, n]");
}

}  // namespace

BigInt layer_bound_product(std::size_t n, std::size_t j) {
    check_layer_args(n, j);
    BigInt prod = 1;
    for (std::size_t i = n + 2 - j; i <= n; ++i) {
        prod *= 3 * BigInt(i) * (i - 1);
    }
    return prod;
}

BigInt layer_bound_factorial(std::size_t n, std::size_t j) {
    check_layer_args(n, j);
    BigInt pow3 = 1;
    for (std::size_t i = 1; i < j; ++i) pow3 *= 3;
    BigInt numerator = pow3 * factorial(n) * factorial(n - 1);
    BigInt denominator = factorial(n - j) * factorial(n + 1 - j);
    return numerator / denominator;
}

BigInt layer_bound(std::size_t n, std::size_t j) {
    return layer_bound_product(n, j);
}

BoundReport state_space_bound(std::size_t n) {
    if (n < 2) throw std::domain_error("state space bound needs n >= 2");
    BoundReport report;
    report.n = n;
    report.layer_bounds.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) {
        report.layer_bounds.push_back(layer_bound(n, j));
        report.total += report.layer_bounds.back();
    }
    return report;
}

double log10_bigint(const BigInt& value) {
    if (value <= 0) throw std::domain_error("log10 of non-positive value");
    std::string digits = value.str();
    std::size_t take = std::min<std::size_t>(digits.size(), 17);
    double lead = std::stod(digits.substr(0, take));
    return std::log10(lead) + static_cast<double>(digits.size() - take);
}

ReachableSet reachable_overapprox(const std::vector<Rational>& numbers,
                                  std::size_t steps, std::size_t cap) {
    std::set<Rational> closure(numbers.begin(), numbers.end());
    bool truncated = false;

    for (std::size_t round = 0; round < steps && !truncated; ++round) {
        // Each round closes over the set as it stood at the round start, so a
        // round never consumes its own results.
        const std::vector<Rational> snapshot(closure.begin(), closure.end());
        const std::size_t before = closure.size();
        for (const Rational& x : snapshot) {
            for (const Rational& y : snapshot) {
                Rational candidates[4];
                std::size_t found = 0;
                candidates[found++] = x + y;
                candidates[found++] = x * y;
                if (y <= x) candidates[found++] = x - y;
                if (!y.is_zero()) candidates[found++] = x / y;
                for (std::size_t c = 0; c < found; ++c) {
                    if (closure.count(candidates[c])) continue;
                    if (cap != 0 && closure.size() >= cap) {
                        truncated = true;
                        break;
                    }
                    closure.insert(candidates[c]);
                }
                if (truncated) break;
            }
            if (truncated) break;
        }
        if (closure.size() == before) break;  // fixpoint
    }

    ReachableSet out;
    out.values.assign(closure.begin(), closure.end());
    out.truncated = truncated;
    return out;
}

std::vector<StatsRow> dataset_stats(
    const std::vector<Instance>& instances,
    const std::unordered_map<std::string, double>& counts) {
    std::map<std::pair<std::string, std::size_t>, std::vector<double>> groups;
    for (const Instance& inst : instances) {
        auto it = counts.find(inst.id);
        if (it == counts.end()) continue;
        groups[{std::string(gen_method_tag(inst.generator)), inst.size()}]
            .push_back(it->second);
    }

    std::vector<StatsRow> rows;
    for (auto& [key, values] : groups) {
        std::sort(values.begin(), values.end());
        StatsRow row;
        row.generator = key.first;
        row.size = key.second;
        row.instances = values.size();
        row.min = values.front();
        row.max = values.back();
        std::size_t mid = values.size() / 2;
        row.median = values.size() % 2 == 1
                         ? values[mid]
                         : (values[mid - 1] + values[mid]) / 2.0;
        double sum = 0;
        for (double v : values) sum += v;
        row.mean = sum / static_cast<double>(values.size());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string stats_to_csv(const std::vector<StatsRow>& rows) {
    std::ostringstream os;
    os << "generator,size,instances,min,median,mean,max\n";
    char buf[160];
    for (const StatsRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%.6g,%.6g,%.6g,%.6g\n",
                      r.generator.c_str(), r.size, r.instances, r.min, r.median,
                      r.mean, r.max);
        os << buf;
    }
    return os.str();
}

}  // namespace countdown
