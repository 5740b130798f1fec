#pragma once

// Interned-value search machinery shared by the solver and the counter.
// States become small sorted vectors of 32-bit value ids, pair results are
// memoized, and visited-state detection runs over flat arrays. Behavior is
// defined to be observationally identical to walking the Rational-domain
// model directly (same action order, same states); tests pin that down.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "countdown/model.hpp"
#include "countdown/rational.hpp"

namespace countdown::engine {

using ValueId = std::uint32_t;
inline constexpr ValueId kNoValue = 0xFFFFFFFFu;

class ValueTable {
public:
    ValueId intern(const Rational& v) {
        auto it = index_.find(v);
        if (it != index_.end()) return it->second;
        ValueId id = static_cast<ValueId>(values_.size());
        values_.push_back(v);
        index_.emplace(values_.back(), id);
        return id;
    }

    const Rational& value(ValueId id) const { return values_[id]; }
    std::size_t size() const { return values_.size(); }

private:
    std::vector<Rational> values_;
    std::unordered_map<Rational, ValueId> index_;
};

// Results of all ops over an unordered pair, keyed with value(lo) <= value(hi).
struct PairOps {
    ValueId add = kNoValue;
    ValueId mul = kNoValue;
    ValueId sub = kNoValue;     // hi - lo
    ValueId div_lo_hi = kNoValue;  // lo / hi, kNoValue when hi = 0
    ValueId div_hi_lo = kNoValue;  // hi / lo, kNoValue when lo = 0
};

class PairOpsCache {
public:
    explicit PairOpsCache(ValueTable& table) : table_(table) { rehash(1 << 12); }

    // Requires value(lo) <= value(hi).
    const PairOps& get(ValueId lo, ValueId hi);

private:
    struct Slot {
        std::uint64_t key;
        PairOps ops;
    };
    static constexpr std::uint64_t kEmptyKey = ~0ULL;

    ValueTable& table_;
    std::vector<Slot> slots_;
    std::size_t count_ = 0;

    void rehash(std::size_t n);
    Slot* find_slot(std::uint64_t key);
};

// A state: value ids sorted ascending by the value they denote. Equal values
// share an id, so runs of equal ids are exactly runs of equal values.
using IdState = std::vector<ValueId>;

IdState intern_state(const NumberState& state, ValueTable& table);
NumberState resolve_state(const IdState& ids, const ValueTable& table);

struct IdAction {
    Op op;
    ValueId x;
    ValueId y;
    ValueId result;
};

// Canonical expansion: fills `out` with the state's actions in (op, x, y)
// order, exactly mirroring legal_actions on the resolved state.
void expand(const IdState& state, PairOpsCache& cache, std::vector<IdAction>& out);

// Child state for one action: parent minus one occurrence of x and of y,
// plus the result, order preserved.
void make_child(const IdState& parent, const IdAction& action,
                const ValueTable& table, IdState& out);

// Open-addressing set of id states; slots carry (hash, offset, length) into
// one flat arena, so growth never moves stored states.
class StateSet {
public:
    StateSet() { slots_.resize(1 << 16); }

    bool insert(const ValueId* ids, std::uint32_t len);
    bool insert(const IdState& state) {
        return insert(state.data(), static_cast<std::uint32_t>(state.size()));
    }

    std::size_t size() const { return count_; }

private:
    struct Slot {
        std::uint64_t hash = 0;
        std::uint32_t off = 0;
        std::uint32_t len = 0;  // 0 marks an empty slot
    };

    std::vector<Slot> slots_;
    std::vector<ValueId> arena_;
    std::size_t count_ = 0;

    void grow();
};

std::uint64_t hash_ids(const ValueId* ids, std::uint32_t len);

}  // namespace countdown::engine
