#pragma once

#include <cstdint>
#include <vector>

namespace cmbip {

// Fixed-size bitset sized at construction. All binary operations require
// equal sizes.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    // First set bit at position >= from, or -1.
    int find_next(int from) const {
        if (from >= n_) return -1;
        int word = from >> 6;
        std::uint64_t w = w_[word] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (w) return (word << 6) + __builtin_ctzll(w);
            if (++word >= static_cast<int>(w_.size())) return -1;
            w = w_[word];
        }
    }

    int find_first() const { return find_next(0); }

    // First bit set here but not in `o`, or -1.
    int find_first_not_in(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i] & ~o.w_[i];
            if (w) return static_cast<int>(i << 6) + __builtin_ctzll(w);
        }
        return -1;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = find_first(); i >= 0; i = find_next(i + 1)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace cmbip
