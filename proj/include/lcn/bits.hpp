#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace lcn {

// Fixed-universe bitset used for vertex sets. The universe size is pinned at
// construction; mixing sets from different universes throws.
struct Bits {
    int n = 0;
    std::vector<std::uint64_t> w;

    Bits() = default;
    explicit Bits(int universe) : n(universe), w((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("negative universe");
    }
    static Bits of(int universe, std::initializer_list<int> xs) {
        Bits b(universe);
        for (int x : xs) b.set(x);
        return b;
    }
    static Bits full(int universe) {
        Bits b(universe);
        for (int i = 0; i < universe; ++i) b.set(i);
        return b;
    }

    void check(int i) const {
        if (i < 0 || i >= n) throw std::out_of_range("bit index out of range");
    }
    void set(int i) { check(i); w[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { check(i); w[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { check(i); return (w[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool any() const {
        for (auto x : w) if (x) return true;
        return false;
    }
    bool empty() const { return !any(); }

    int lowest() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
    // Smallest member > i, or -1.
    int next(int i) const {
        for (int j = i + 1; j < n;) {
            std::uint64_t word = w[j >> 6] >> (j & 63);
            if (word) return j + __builtin_ctzll(word);
            j = ((j >> 6) + 1) << 6;
        }
        return -1;
    }

    Bits& operator|=(const Bits& o) {
        same(o);
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        same(o);
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    Bits& subtract(const Bits& o) {
        same(o);
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits minus(Bits a, const Bits& b) { return a.subtract(b); }

    bool intersects(const Bits& o) const {
        same(o);
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool is_subset_of(const Bits& o) const {
        same(o);
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    bool operator==(const Bits& o) const { return n == o.n && w == o.w; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

    // Orders sets by their sorted element sequence; for sets where neither
    // contains the other this is the usual lexicographic order.
    bool lex_less(const Bits& o) const {
        same(o);
        for (size_t i = 0; i < w.size(); ++i) {
            std::uint64_t diff = w[i] ^ o.w[i];
            if (diff) {
                int bit = __builtin_ctzll(diff);
                return (w[i] >> bit) & 1;  // the set holding the smaller element wins
            }
        }
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = lowest(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

    template <class F>
    void for_each(F f) const {
        for (int v = lowest(); v != -1; v = next(v)) f(v);
    }

   private:
    void same(const Bits& o) const {
        if (n != o.n) throw std::invalid_argument("bitset universe mismatch");
    }
};

}  // namespace lcn
