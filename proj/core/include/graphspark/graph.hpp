#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graphspark/errors.hpp"
#include "graphspark/vertex_set.hpp"

namespace graphspark {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Invariants: adjacency is symmetric and loop-free. Instances are treated
/// as immutable once populated; every operation in the library takes a
/// const reference and is a pure function of its inputs, so graphs are safe
/// to share across threads.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_order(n))) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    /// Construction-phase only; graphs are not mutated once in use.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw DomainError("loops are not allowed");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    int order() const { return n_; }

    long long edge_count() const {
        long long d = 0;
        for (int v = 0; v < n_; ++v) d += adj_[v].count();
        return d / 2;
    }

    const VertexSet& neighbors(int v) const { return adj_[v]; }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[v];
        s.set(v);
        return s;
    }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) < d) d = degree(v);
        return d;
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    /// Vertices reachable from v (v included).
    VertexSet component_of(int v) const {
        VertexSet seen = VertexSet::single(v);
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (int u : frontier) next |= adj_[u];
            frontier = next - seen;
            seen |= next;
        }
        return seen;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        return component_of(0) == vertices();
    }

    std::optional<int> isolated_vertex() const {
        for (int v = 0; v < n_; ++v)
            if (adj_[v].empty()) return v;
        return std::nullopt;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    static int check_order(int n) {
        if (n < 1) throw DomainError("graph order must be at least 1");
        if (n > VertexSet::capacity())
            throw CapacityError("graph order " + std::to_string(n) +
                                " exceeds vertex-set capacity " +
                                std::to_string(VertexSet::capacity()) +
                                "; rebuild with a larger GRAPHSPARK_SET_WORDS");
        return n;
    }

    int n_;
    std::vector<VertexSet> adj_;
};

/// First pair (u,v), in lexicographic order, with N[u]=N[v] (adjacent) or
/// N(u)=N(v) (nonadjacent); nullopt when the graph has no duplicate vertices.
std::optional<std::pair<int, int>> duplicate_vertices(const Graph& g);

} // namespace graphspark
