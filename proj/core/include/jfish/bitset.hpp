#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>

namespace jfish {

#ifndef JFISH_MAX_VERTICES
#define JFISH_MAX_VERTICES 64
#endif

inline constexpr int kMaxVertices = JFISH_MAX_VERTICES;
static_assert(kMaxVertices == 64 || kMaxVertices == 128,
              "vertex capacity is tuned for 1 or 2 words");

// Fixed-capacity vertex set. One word at the default capacity, so the
// search inner loops compile down to plain integer ops.
struct VertexSet {
    static constexpr int kWords = (kMaxVertices + 63) / 64;
    std::array<std::uint64_t, kWords> w{};

    static VertexSet full(int n) {
        VertexSet s;
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }
    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    // Lowest set bit; -1 when empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }
    // Lowest set bit >= from; -1 when none. The usual iteration idiom:
    //   for (int v = s.next(0); v >= 0; v = s.next(v + 1))
    int next(int from) const {
        if (from >= kMaxVertices) return -1;
        int wi = from >> 6;
        std::uint64_t cur = w[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return wi * 64 + std::countr_zero(cur);
            if (++wi >= kWords) return -1;
            cur = w[wi];
        }
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= ~o.w[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w == b.w; }
};

} // namespace jfish
