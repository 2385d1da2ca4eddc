#pragma once

#include <cstdint>
#include <vector>

namespace gr {

// Fixed-capacity bitset sized at runtime. Vertex sets for the detectors.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }

    // Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    int first() const {
        for (size_t wi = 0; wi < w_.size(); ++wi)
            if (w_[wi]) return static_cast<int>(wi * 64 + __builtin_ctzll(w_[wi]));
        return -1;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace gr
