#include "graphspark/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace graphspark {
namespace {

// Unit-capacity max flow on the vertex-split network: each vertex v becomes
// v_in = 2v and v_out = 2v+1 joined by a capacity-1 arc; each edge uv becomes
// u_out->v_in and v_out->u_in with effectively unbounded capacity. The max
// flow from s_out to t_in equals the number of internally disjoint s-t paths
// (Menger), i.e. the minimum s-t vertex cut for non-adjacent s, t.
class SplitFlow {
public:
    SplitFlow(const Graph& g) : g_(g), n_(g.order()), head_(2 * n_, -1) {
        for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u))
                if (v > u) {
                    add_arc(2 * u + 1, 2 * v, n_);
                    add_arc(2 * v + 1, 2 * u, n_);
                }
    }

    // Max flow s_out -> t_in, aborting once the flow reaches `limit`.
    int max_flow(int s, int t, int limit) {
        source_ = 2 * s + 1;
        sink_ = 2 * t;
        for (auto& a : arcs_) a.flow = 0;
        int total = 0;
        while (total < limit && augment()) ++total;
        return total;
    }

    // After max_flow: the cut vertices are those whose in-node is reachable
    // in the residual network but whose out-node is not.
    VertexSet cut_vertices() {
        std::vector<char> seen(2 * n_, 0);
        reach(seen);
        VertexSet cut;
        for (int v = 0; v < n_; ++v)
            if (seen[2 * v] && !seen[2 * v + 1]) cut.set(v);
        return cut;
    }

private:
    struct Arc {
        int to, next, cap, flow;
    };

    void add_arc(int from, int to, int cap) {
        arcs_.push_back({to, head_[from], cap, 0});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0, 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    bool augment() {
        std::vector<int> parent_arc(2 * n_, -1);
        std::vector<char> seen(2 * n_, 0);
        std::queue<int> q;
        q.push(source_);
        seen[source_] = 1;
        while (!q.empty() && !seen[sink_]) {
            int u = q.front();
            q.pop();
            for (int a = head_[u]; a != -1; a = arcs_[a].next) {
                const Arc& arc = arcs_[a];
                if (!seen[arc.to] && arc.cap - arc.flow > 0) {
                    seen[arc.to] = 1;
                    parent_arc[arc.to] = a;
                    q.push(arc.to);
                }
            }
        }
        if (!seen[sink_]) return false;
        for (int v = sink_; v != source_; v = arcs_[parent_arc[v] ^ 1].to) {
            arcs_[parent_arc[v]].flow += 1;
            arcs_[parent_arc[v] ^ 1].flow -= 1;
        }
        return true;
    }

    void reach(std::vector<char>& seen) {
        std::queue<int> q;
        q.push(source_);
        seen[source_] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a = head_[u]; a != -1; a = arcs_[a].next)
                if (!seen[arcs_[a].to] && arcs_[a].cap - arcs_[a].flow > 0) {
                    seen[arcs_[a].to] = 1;
                    q.push(arcs_[a].to);
                }
        }
    }

    const Graph& g_;
    int n_;
    int source_ = 0, sink_ = 0;
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

struct CutResult {
    int kappa;
    std::optional<VertexSet> cut;
};

CutResult connectivity_impl(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return {0, std::nullopt};
    if (!g.is_connected()) return {0, VertexSet{}};

    // kappa(K_n) = n-1 by convention; no cut set exists.
    bool complete = true;
    for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
    if (complete) return {n - 1, std::nullopt};

    SplitFlow flow(g);
    int best = n - 1;
    std::optional<VertexSet> best_cut;

    auto probe = [&](int s, int t) {
        if (s == t || g.has_edge(s, t)) return;
        int f = flow.max_flow(s, t, best);
        if (f < best) {
            best = f;
            best_cut = flow.cut_vertices();
        }
    };

    // Pin a minimum-degree vertex v0: every minimum cut either avoids v0
    // (covered by the flows from v0 to its non-neighbors) or contains it
    // (covered by flows between non-adjacent pairs of its neighbors).
    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;

    for (int t = 0; t < n; ++t) probe(v0, t);
    auto nb = g.neighbors(v0).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) probe(nb[i], nb[j]);

    return {best, best_cut};
}

} // namespace

int vertex_connectivity(const Graph& g) { return connectivity_impl(g).kappa; }

std::optional<VertexSet> min_vertex_cut(const Graph& g) { return connectivity_impl(g).cut; }

} // namespace graphspark
