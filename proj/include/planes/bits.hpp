#pragma once

#include <cstdint>
#include <vector>

namespace planes {

/// Fixed-width bitset used for incidence rows. Width is set at construction;
/// all binary operations assume equal width.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    int size() const { return n_; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int intersect_count(const Bits& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }

    /// Index of the single common bit; -1 if none. Caller guarantees at most one.
    int intersect_single(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i] & o.w_[i];
            if (x) return int(i) * 64 + __builtin_ctzll(x);
        }
        return -1;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace planes
