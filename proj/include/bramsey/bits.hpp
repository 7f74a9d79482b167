#ifndef BRAMSEY_BITS_HPP
#define BRAMSEY_BITS_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace bramsey {

// Dynamic bitset over 64-bit words, sized once at construction.
// Row masks of the graph and all search frontiers use this type; the hot
// operations are and/or/and_not, popcount and set-bit iteration.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : w_) w = 0; }
    void set_all() {
        for (auto& w : w_) w = ~uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // -1 when empty
    int first() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
        return -1;
    }
    // first set bit >= i, or -1
    int next(int i) const {
        if (i >= nbits_) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t w = w_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(k * 64 + std::countr_zero(w));
            if (++k >= w_.size()) return -1;
            w = w_[k];
        }
    }

    Bits& operator&=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bits& and_not(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { a &= b; return a; }
    friend Bits operator|(Bits a, const Bits& b) { a |= b; return a; }

    bool intersects(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    int count_and(const Bits& o) const {
        int c = 0;
        for (size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }
    bool is_subset_of(const Bits& o) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                f(int(k * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    static Bits of(int nbits, const std::vector<int>& idx) {
        Bits b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }

private:
    void trim() {
        int rem = nbits_ & 63;
        if (rem && !w_.empty()) w_.back() &= (uint64_t{1} << rem) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace bramsey

#endif
