#pragma once

#include <cstdint>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace grr {

// Raised when an operation would exceed a configured search/order budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed-size bit vector over n positions, used for element sets, connection
// sets and adjacency rows. Word 0 holds bits 0..63.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool none() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    // -1 when no further bit is set
    int find_first() const { return find_next(-1); }
    int find_next(int prev) const {
        for (int i = prev + 1; i < n_; ++i) {
            uint64_t w = w_[i >> 6] >> (i & 63);
            if (w == 0) { i |= 63; continue; }
            return i + std::countr_zero(w);
        }
        return -1;
    }

    std::vector<int> to_list() const {
        std::vector<int> out;
        for (int i = find_first(); i >= 0; i = find_next(i)) out.push_back(i);
        return out;
    }

    Bitset& operator&=(const Bitset& o) { for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i]; return *this; }
    Bitset& operator|=(const Bitset& o) { for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i]; return *this; }
    Bitset& operator^=(const Bitset& o) { for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i]; return *this; }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }
    bool operator<(const Bitset& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return w_ < o.w_;
    }

    bool subset_of(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Hex encoding: byte k covers bits 8k..8k+7, emitted low byte first,
    // two hex digits per byte (high nibble first).
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string out;
        int bytes = (n_ + 7) / 8;
        for (int b = 0; b < bytes; ++b) {
            uint8_t v = uint8_t(w_[b >> 3] >> ((b & 7) * 8));
            out.push_back(digits[v >> 4]);
            out.push_back(digits[v & 15]);
        }
        return out;
    }
    static Bitset from_hex(int n, const std::string& hex) {
        Bitset s(n);
        int bytes = (n + 7) / 8;
        if (int(hex.size()) != 2 * bytes)
            throw std::invalid_argument("hex bit vector has wrong length for " + std::to_string(n) + " bits");
        auto nib = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            throw std::invalid_argument(std::string("bad hex digit '") + c + "'");
        };
        for (int b = 0; b < bytes; ++b) {
            uint8_t v = uint8_t(nib(hex[2 * b]) * 16 + nib(hex[2 * b + 1]));
            s.w_[b >> 3] |= uint64_t(v) << ((b & 7) * 8);
        }
        for (int i = n; i < bytes * 8 && i < int(s.w_.size()) * 64; ++i)
            if (s.test(i)) throw std::invalid_argument("hex bit vector sets bits beyond group order");
        return s;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

inline Bitset singleton(int n, int i) {
    Bitset s(n);
    s.set(i);
    return s;
}

inline Bitset full_set(int n) {
    Bitset s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
}

}  // namespace grr
