#ifndef BRAMSEY_RNG_HPP
#define BRAMSEY_RNG_HPP

#include <cstdint>
#include <vector>

namespace bramsey {

// splitmix64. Self-contained so that seeded runs produce identical streams on
// every platform; std::uniform_int_distribution is not bit-stable across
// standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    uint64_t next_below(uint64_t bound) {
        // rejection sampling keeps the distribution exact
        uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound + 1) % bound;
        uint64_t x;
        do { x = next_u64(); } while (x > limit);
        return x % bound;
    }

    int next_int(int lo, int hi) { // inclusive range
        return lo + int(next_below(uint64_t(hi - lo + 1)));
    }

    bool next_bool() { return next_u64() & 1; }

    // true with probability num/den
    bool chance(uint64_t num, uint64_t den) { return next_below(den) < num; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // derived stream for a sub-task, stable under task reordering
    Rng fork(uint64_t tag) {
        Rng r(state_ ^ (tag * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
        r.next_u64();
        return r;
    }

private:
    uint64_t state_;
};

} // namespace bramsey

#endif
