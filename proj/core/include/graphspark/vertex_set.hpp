#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace graphspark {

/// Fixed-capacity vertex subset stored as machine words. The default build
/// uses one 64-bit word (vertices 0..63); configure GRAPHSPARK_SET_WORDS at
/// build time for larger graphs. All set operations are O(Words).
template <int Words>
class BasicVertexSet {
    static_assert(Words >= 1);

public:
    static constexpr int capacity() { return 64 * Words; }

    constexpr BasicVertexSet() = default;

    BasicVertexSet(std::initializer_list<int> vs) {
        for (int v : vs) set(v);
    }

    /// The full set {0, .., n-1}.
    static BasicVertexSet full(int n) {
        BasicVertexSet s;
        for (int w = 0; w < Words; ++w) {
            int lo = 64 * w;
            if (n <= lo) break;
            int k = n - lo >= 64 ? 64 : n - lo;
            s.w_[w] = k == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
        }
        return s;
    }

    static BasicVertexSet single(int v) {
        BasicVertexSet s;
        s.set(v);
        return s;
    }

    bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    /// Lowest member; -1 when empty.
    int lowest() const {
        for (int i = 0; i < Words; ++i)
            if (w_[i]) return 64 * i + std::countr_zero(w_[i]);
        return -1;
    }

    bool contains(const BasicVertexSet& sub) const {
        for (int i = 0; i < Words; ++i)
            if (sub.w_[i] & ~w_[i]) return false;
        return true;
    }

    bool intersects(const BasicVertexSet& o) const {
        for (int i = 0; i < Words; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    BasicVertexSet& operator&=(const BasicVertexSet& o) {
        for (int i = 0; i < Words; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    BasicVertexSet& operator|=(const BasicVertexSet& o) {
        for (int i = 0; i < Words; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    BasicVertexSet& operator^=(const BasicVertexSet& o) {
        for (int i = 0; i < Words; ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    /// Set difference.
    BasicVertexSet& operator-=(const BasicVertexSet& o) {
        for (int i = 0; i < Words; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
    friend BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
    friend BasicVertexSet operator^(BasicVertexSet a, const BasicVertexSet& b) { return a ^= b; }
    friend BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }

    friend bool operator==(const BasicVertexSet& a, const BasicVertexSet& b) {
        return a.w_ == b.w_;
    }
    friend bool operator!=(const BasicVertexSet& a, const BasicVertexSet& b) {
        return !(a == b);
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v : *this) out.push_back(v);
        return out;
    }

    /// Iterates members in increasing order.
    class iterator {
    public:
        iterator(const BasicVertexSet* s, int pos) : s_(s), pos_(pos) {}
        int operator*() const { return pos_; }
        iterator& operator++() {
            pos_ = s_->next_after(pos_);
            return *this;
        }
        bool operator!=(const iterator& o) const { return pos_ != o.pos_; }

    private:
        const BasicVertexSet* s_;
        int pos_;
    };

    iterator begin() const { return iterator(this, lowest() < 0 ? capacity() : lowest()); }
    iterator end() const { return iterator(this, capacity()); }

    std::uint64_t word(int i) const { return w_[i]; }

private:
    int next_after(int v) const {
        ++v;
        if (v >= capacity()) return capacity();
        int wi = v >> 6;
        std::uint64_t w = w_[wi] >> (v & 63);
        if (w) return v + std::countr_zero(w);
        for (++wi; wi < Words; ++wi)
            if (w_[wi]) return 64 * wi + std::countr_zero(w_[wi]);
        return capacity();
    }

    std::array<std::uint64_t, Words> w_{};
};

#ifndef GRAPHSPARK_SET_WORDS
#define GRAPHSPARK_SET_WORDS 1
#endif

using VertexSet = BasicVertexSet<GRAPHSPARK_SET_WORDS>;

/// Orders sets as sorted vertex sequences ({0,3} < {1,2}, {0} < {0,1}).
/// Used for deterministic tie-breaking.
template <int W>
bool lex_less(const BasicVertexSet<W>& a, const BasicVertexSet<W>& b) {
    auto ai = a.begin(), bi = b.begin();
    while (ai != a.end() && bi != b.end()) {
        if (*ai != *bi) return *ai < *bi;
        ++ai;
        ++bi;
    }
    return bi != b.end(); // a exhausted first: proper prefix
}

/// popcount of (a & b) without materializing the intersection.
template <int W>
int intersection_size(const BasicVertexSet<W>& a, const BasicVertexSet<W>& b) {
    int c = 0;
    for (int i = 0; i < W; ++i) c += std::popcount(a.word(i) & b.word(i));
    return c;
}

} // namespace graphspark
