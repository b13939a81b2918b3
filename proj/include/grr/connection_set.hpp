#pragma once

#include "grr/group.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace grr {

/**
 * Canonical enumeration of the 2^{c(G)} inverse-closed subsets of a group.
 *
 * Free choices are ordered: one bit per element of order <= 2 (identity and
 * involutions) in increasing element index, then one bit per unordered pair
 * {x, x^{-1}}, keyed and ordered by the smaller element. Enumeration index
 * bit p drives slot p, so index decoding is O(c) and ranges partition
 * cleanly across workers.
 */
class ConnectionSetEnumerator {
public:
    ConnectionSetEnumerator(const FiniteGroup& g, int max_c = 30);

    const FiniteGroup& group() const { return *group_; }
    int c() const { return int(singles_.size() + pairs_.size()); }
    uint64_t count() const { return uint64_t(1) << c(); }

    Bitset decode(uint64_t index) const;
    uint64_t encode(const Bitset& s) const;  // inverse of decode

    // allocation-free variant for groups of order <= 64
    uint64_t decode_mask(uint64_t index) const;

private:
    const FiniteGroup* group_;
    std::vector<int> singles_;
    std::vector<std::pair<int, int>> pairs_;
};

// Near-equal contiguous blocks [start, end) covering [0, total).
std::vector<std::pair<uint64_t, uint64_t>> partition_range(uint64_t total, int worker_count);
// Split of a group's full enumeration index range.
std::vector<std::pair<uint64_t, uint64_t>> partition_range(const ConnectionSetEnumerator& en,
                                                           int worker_count);

}  // namespace grr
