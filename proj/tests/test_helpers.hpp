#pragma once

#include <random>
#include <set>
#include <vector>

#include "graphspark/forts.hpp"
#include "graphspark/graph.hpp"
#include "graphspark/linalg.hpp"
#include "graphspark/rational_matrix.hpp"

// Test-side oracles, deliberately independent of the library's fast paths:
// plain containers, no bitsets, naive algorithms.
namespace oracle {

using graphspark::Graph;
using graphspark::Rational;
using graphspark::RationalMatrix;
using graphspark::VertexSet;

inline std::vector<std::set<int>> adjacency_sets(const Graph& g) {
    std::vector<std::set<int>> adj(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (u != v && g.has_edge(u, v)) adj[static_cast<std::size_t>(u)].insert(v);
    return adj;
}

inline bool is_fort(const Graph& g, const std::set<int>& f) {
    if (f.empty()) return false;
    auto adj = adjacency_sets(g);
    for (int v = 0; v < g.order(); ++v) {
        if (f.count(v)) continue;
        int hits = 0;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (f.count(u)) ++hits;
        if (hits == 1) return false;
    }
    return true;
}

inline std::set<int> as_set(const VertexSet& s) {
    std::set<int> out;
    for (int v : s) out.insert(v);
    return out;
}

// Closure applying forces in a randomized order each round.
inline std::set<int> closure_random_order(const Graph& g, std::set<int> blue, std::mt19937_64& rng) {
    auto adj = adjacency_sets(g);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> order(blue.begin(), blue.end());
        std::shuffle(order.begin(), order.end(), rng);
        for (int v : order) {
            std::vector<int> white;
            for (int u : adj[static_cast<std::size_t>(v)])
                if (!blue.count(u)) white.push_back(u);
            if (white.size() == 1) {
                blue.insert(white[0]);
                changed = true;
                break; // re-randomize after every force
            }
        }
    }
    return blue;
}

// Minimum fort size by scanning all subsets; -1 if none (cannot happen).
inline int min_fort_size(const Graph& g) {
    const int n = g.order();
    int best = -1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::set<int> f;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) f.insert(v);
        if (is_fort(g, f)) {
            int sz = static_cast<int>(f.size());
            if (best < 0 || sz < best) best = sz;
        }
    }
    return best;
}

// Determinant by cofactor expansion.
inline Rational det_cofactor(const RationalMatrix& a) {
    const int n = a.rows();
    if (n == 1) return a.at(0, 0);
    Rational acc;
    for (int j = 0; j < n; ++j) {
        if (a.at(0, j).is_zero()) continue;
        std::vector<int> rows, cols;
        for (int i = 1; i < n; ++i) rows.push_back(i);
        for (int c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Rational minor = det_cofactor(a.submatrix(rows, cols));
        Rational term = a.at(0, j) * minor;
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v))
                h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

inline bool connected_after_removal(const Graph& g, const VertexSet& removed) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (!removed.test(v)) keep.push_back(v);
    if (keep.size() <= 1) return true;
    std::set<int> seen{keep[0]};
    std::vector<int> stack{keep[0]};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : keep)
            if (!seen.count(v) && g.has_edge(u, v)) {
                seen.insert(v);
                stack.push_back(v);
            }
    }
    return seen.size() == keep.size();
}

// The example matrix with equal first two rows (5-cycle plus chords 1-3,
// 2-5 in 1-based labels).
inline RationalMatrix five_cycle_chords_matrix() {
    return RationalMatrix::from_rows({{1, 1, 1, 0, 1},
                                      {1, 1, 1, 0, 1},
                                      {1, 1, 3, 1, 0},
                                      {0, 0, 1, 3, 1},
                                      {1, 1, 0, 1, 3}});
}

inline Graph five_cycle_chords_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 4}});
}

// The rank-3 complete-bipartite pattern matrix with all 3x3 principal
// submatrices nonsingular.
inline RationalMatrix k23_rank3_matrix() {
    return RationalMatrix::from_rows({{0, 0, 3, 1, 4},
                                      {0, 2, 4, 4, 4},
                                      {3, 4, -4, 0, 0},
                                      {1, 4, 0, 4, 0},
                                      {4, 4, 0, 0, 8}});
}

} // namespace oracle
