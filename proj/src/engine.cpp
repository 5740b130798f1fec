#include "engine.hpp"

#include <algorithm>
#include <cstring>

namespace countdown::engine {

const PairOps& PairOpsCache::get(ValueId lo, ValueId hi) {
    std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
    Slot* slot = find_slot(key);
    if (slot->key == key) return slot->ops;

    // Copy, don't reference: intern() below may grow the table and invalidate
    // references into it.
    const Rational a = table_.value(lo);
    const Rational b = table_.value(hi);
    PairOps ops;
    ops.add = table_.intern(a + b);
    ops.mul = table_.intern(a * b);
    ops.sub = table_.intern(b - a);
    if (!b.is_zero()) ops.div_lo_hi = table_.intern(a / b);
    if (!a.is_zero()) ops.div_hi_lo = table_.intern(b / a);

    // Interning may have grown the table but not this cache; the slot
    // pointer is still valid because only rehash() moves slots.
    slot->key = key;
    slot->ops = ops;
    if (++count_ * 10 >= slots_.size() * 7) rehash(slots_.size() * 2);
    return find_slot(key)->ops;
}

void PairOpsCache::rehash(std::size_t n) {
    std::vector<Slot> fresh(n);
    for (Slot& s : fresh) s.key = kEmptyKey;
    std::swap(slots_, fresh);
    for (const Slot& s : fresh) {
        if (s.key == kEmptyKey) continue;
        *find_slot(s.key) = s;
    }
}

PairOpsCache::Slot* PairOpsCache::find_slot(std::uint64_t key) {
    std::size_t mask = slots_.size() - 1;
    std::uint64_t h = key;
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    std::size_t i = static_cast<std::size_t>(h) & mask;
    while (slots_[i].key != key && slots_[i].key != kEmptyKey) i = (i + 1) & mask;
    return &slots_[i];
}

IdState intern_state(const NumberState& state, ValueTable& table) {
    IdState ids;
    ids.reserve(state.size());
    for (const Rational& v : state) ids.push_back(table.intern(v));
    return ids;
}

NumberState resolve_state(const IdState& ids, const ValueTable& table) {
    NumberState state;
    state.reserve(ids.size());
    for (ValueId id : ids) state.push_back(table.value(id));
    return state;
}

void expand(const IdState& state, PairOpsCache& cache, std::vector<IdAction>& out) {
    out.clear();
    const std::size_t k = state.size();
    if (k < 2) return;

    // Runs of equal ids = distinct values with multiplicities, already in
    // ascending value order.
    thread_local std::vector<ValueId> run_ids;
    thread_local std::vector<std::uint32_t> run_mult;
    run_ids.clear();
    run_mult.clear();
    for (std::size_t i = 0; i < k;) {
        std::size_t j = i;
        while (j < k && state[j] == state[i]) ++j;
        run_ids.push_back(state[i]);
        run_mult.push_back(static_cast<std::uint32_t>(j - i));
        i = j;
    }
    const std::size_t m = run_ids.size();

    auto pair_ok = [&](std::size_t i, std::size_t j) {
        return i != j || run_mult[i] >= 2;
    };
    auto ops_of = [&](std::size_t i, std::size_t j) -> const PairOps& {
        return cache.get(run_ids[i], run_ids[j]);  // i <= j: value order holds
    };

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            if (pair_ok(i, j))
                out.push_back({Op::Add, run_ids[i], run_ids[j], ops_of(i, j).add});

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            if (pair_ok(i, j))
                out.push_back({Op::Mul, run_ids[i], run_ids[j], ops_of(i, j).mul});

    // Sub: left operand is the pair maximum.
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i <= j; ++i)
            if (pair_ok(i, j))
                out.push_back({Op::Sub, run_ids[j], run_ids[i], ops_of(i, j).sub});

    // Div: both directions for distinct pairs, once for equal pairs.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!pair_ok(i, j)) continue;
            ValueId q;
            if (i <= j) {
                q = ops_of(i, j).div_lo_hi;
            } else {
                q = ops_of(j, i).div_hi_lo;
            }
            if (q == kNoValue) continue;  // divisor is zero
            out.push_back({Op::Div, run_ids[i], run_ids[j], q});
        }
    }
}

void make_child(const IdState& parent, const IdAction& action,
                const ValueTable& table, IdState& out) {
    out.clear();
    out.reserve(parent.size() - 1);

    // Copy all but one occurrence of x and one of y.
    bool skip_x = true;
    bool skip_y = true;
    for (ValueId id : parent) {
        if (skip_x && id == action.x) {
            skip_x = false;
            continue;
        }
        if (skip_y && id == action.y) {
            skip_y = false;
            continue;
        }
        out.push_back(id);
    }

    // Insert the result at its value-ordered position.
    const Rational& r = table.value(action.result);
    auto pos = std::lower_bound(out.begin(), out.end(), action.result,
                                [&](ValueId id, ValueId) {
                                    return table.value(id) < r;
                                });
    out.insert(pos, action.result);
}

std::uint64_t hash_ids(const ValueId* ids, std::uint32_t len) {
    std::uint64_t h = 1469598103934665603ULL ^ len;
    for (std::uint32_t i = 0; i < len; ++i) {
        h ^= ids[i];
        h *= 1099511628211ULL;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

bool StateSet::insert(const ValueId* ids, std::uint32_t len) {
    if ((count_ + 1) * 10 >= slots_.size() * 7) grow();

    std::uint64_t h = hash_ids(ids, len);
    std::size_t mask = slots_.size() - 1;
    std::size_t i = static_cast<std::size_t>(h) & mask;
    for (;;) {
        Slot& s = slots_[i];
        if (s.len == 0) {
            s.hash = h;
            s.off = static_cast<std::uint32_t>(arena_.size());
            s.len = len;
            arena_.insert(arena_.end(), ids, ids + len);
            ++count_;
            return true;
        }
        if (s.hash == h && s.len == len &&
            std::memcmp(arena_.data() + s.off, ids, len * sizeof(ValueId)) == 0) {
            return false;
        }
        i = (i + 1) & mask;
    }
}

void StateSet::grow() {
    std::vector<Slot> fresh(slots_.size() * 2);
    std::size_t mask = fresh.size() - 1;
    for (const Slot& s : slots_) {
        if (s.len == 0) continue;
        std::size_t i = static_cast<std::size_t>(s.hash) & mask;
        while (fresh[i].len != 0) i = (i + 1) & mask;
        fresh[i] = s;
    }
    slots_ = std::move(fresh);
}

}  // namespace countdown::engine
