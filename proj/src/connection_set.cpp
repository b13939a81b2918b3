#include "grr/connection_set.hpp"

#include <algorithm>

namespace grr {

ConnectionSetEnumerator::ConnectionSetEnumerator(const FiniteGroup& g, int max_c) : group_(&g) {
    for (int e = 0; e < g.n; ++e) {
        if (g.inv[e] == e) {
            singles_.push_back(e);
        } else if (e < g.inv[e]) {
            pairs_.emplace_back(e, g.inv[e]);
        }
    }
    if (c() > max_c)
        throw budget_error("inverse-closed enumeration: c = " + std::to_string(c()) +
                           " exceeds budget " + std::to_string(max_c));
    if (c() > 62) throw budget_error("inverse-closed enumeration: c > 62 overflows the index space");
}

Bitset ConnectionSetEnumerator::decode(uint64_t index) const {
    if (index >> c()) throw std::out_of_range("enumeration index out of range");
    Bitset s(group_->n);
    int slot = 0;
    for (int e : singles_) {
        if ((index >> slot) & 1) s.set(e);
        ++slot;
    }
    for (auto [a, b] : pairs_) {
        if ((index >> slot) & 1) {
            s.set(a);
            s.set(b);
        }
        ++slot;
    }
    return s;
}

uint64_t ConnectionSetEnumerator::decode_mask(uint64_t index) const {
    if (group_->n > 64) throw std::invalid_argument("decode_mask requires order <= 64");
    if (index >> c()) throw std::out_of_range("enumeration index out of range");
    uint64_t mask = 0;
    int slot = 0;
    for (int e : singles_) {
        mask |= ((index >> slot) & 1) << e;
        ++slot;
    }
    for (auto [a, b] : pairs_) {
        if ((index >> slot) & 1) mask |= (uint64_t(1) << a) | (uint64_t(1) << b);
        ++slot;
    }
    return mask;
}

uint64_t ConnectionSetEnumerator::encode(const Bitset& s) const {
    if (!is_inverse_closed(*group_, s))
        throw std::invalid_argument("encode requires an inverse-closed set");
    uint64_t index = 0;
    int slot = 0;
    for (int e : singles_) {
        if (s.test(e)) index |= uint64_t(1) << slot;
        ++slot;
    }
    for (auto [a, b] : pairs_) {
        (void)b;
        if (s.test(a)) index |= uint64_t(1) << slot;
        ++slot;
    }
    return index;
}

std::vector<std::pair<uint64_t, uint64_t>> partition_range(uint64_t total, int worker_count) {
    if (worker_count < 1) throw std::invalid_argument("worker_count must be >= 1");
    std::vector<std::pair<uint64_t, uint64_t>> out;
    out.reserve(worker_count);
    for (int i = 0; i < worker_count; ++i) {
        uint64_t lo = total / worker_count * i + std::min<uint64_t>(i, total % worker_count);
        uint64_t hi = total / worker_count * (i + 1) + std::min<uint64_t>(i + 1, total % worker_count);
        out.emplace_back(lo, hi);
    }
    return out;
}

std::vector<std::pair<uint64_t, uint64_t>> partition_range(const ConnectionSetEnumerator& en,
                                                           int worker_count) {
    return partition_range(en.count(), worker_count);
}

}  // namespace grr
