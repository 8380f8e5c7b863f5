#include "graphspark/small_graphs.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

namespace graphspark {
namespace {

// Max-code search. Positions are filled one vertex at a time; placing the
// vertex at position d appends d bits (its adjacency to positions 0..d-1) to
// the code. Candidates are tried in decreasing pattern order and a branch is
// pruned as soon as its partial code falls below the best code's prefix.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(g.order()) {
        for (int v = 0; v < n_; ++v) {
            std::uint32_t row = 0;
            for (int u : g.neighbors(v)) row |= std::uint32_t{1} << u;
            adj_[v] = row;
        }
        total_bits_ = n_ * (n_ - 1) / 2;
    }

    std::uint64_t run() {
        have_best_ = false;
        best_ = 0;
        dfs(0, 0, 0, 0);
        return best_;
    }

private:
    void dfs(int depth, std::uint64_t code, int bits, std::uint32_t placed_mask) {
        if (depth == n_) {
            if (!have_best_ || code > best_) {
                best_ = code;
                have_best_ = true;
            }
            return;
        }
        struct Cand {
            std::uint32_t pattern;
            int v;
        };
        Cand cands[12];
        int nc = 0;
        for (int v = 0; v < n_; ++v) {
            if (placed_mask & (std::uint32_t{1} << v)) continue;
            std::uint32_t pat = 0;
            for (int i = 0; i < depth; ++i)
                pat = (pat << 1) | ((adj_[v] >> order_[i]) & 1);
            cands[nc++] = {pat, v};
        }
        std::sort(cands, cands + nc,
                  [](const Cand& a, const Cand& b) { return a.pattern > b.pattern; });

        const int bits2 = bits + depth;
        for (int c = 0; c < nc; ++c) {
            std::uint64_t code2 = (code << depth) | cands[c].pattern;
            if (have_best_) {
                std::uint64_t best_prefix = best_ >> (total_bits_ - bits2);
                if (code2 < best_prefix) break; // sorted: the rest are no better
            }
            order_[depth] = cands[c].v;
            dfs(depth + 1, code2, bits2, placed_mask | (std::uint32_t{1} << cands[c].v));
        }
    }

    int n_;
    int total_bits_;
    std::uint32_t adj_[12]{};
    int order_[12]{};
    std::uint64_t best_ = 0;
    bool have_best_ = false;
};

std::vector<Graph> extend_by_one(const std::vector<Graph>& prev, int n) {
    // Every connected n-vertex graph is a connected (n-1)-vertex graph plus
    // a new vertex with a nonempty neighborhood (remove a spanning-tree leaf).
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> reps;
    const std::uint32_t subsets = std::uint32_t{1} << (n - 1);
    for (const Graph& g : prev) {
        for (std::uint32_t mask = 1; mask < subsets; ++mask) {
            Graph h(n);
            for (int u = 0; u < n - 1; ++u)
                for (int v : g.neighbors(u))
                    if (v > u) h.add_edge(u, v);
            for (int u = 0; u < n - 1; ++u)
                if (mask & (std::uint32_t{1} << u)) h.add_edge(u, n - 1);
            std::uint64_t code = canonical_code(h);
            if (seen.insert(code).second) reps.emplace_back(code, std::move(h));
        }
    }
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [code, g] : reps) out.push_back(std::move(g));
    return out;
}

} // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.order() > 11)
        throw CapacityError("canonical_code supports n <= 11 (64-bit codes)");
    return CanonicalSearch(g).run();
}

const std::array<std::vector<Graph>, 9>& connected_graph_corpus(int max_n) {
    if (max_n < 1 || max_n > 8)
        throw CapacityError("connected graph corpus supports 1 <= max_n <= 8");

    static std::mutex mu;
    static std::array<std::vector<Graph>, 9> corpus;
    static int filled = 0;

    std::lock_guard<std::mutex> lock(mu);
    if (filled == 0) {
        corpus[1] = {Graph(1)};
        filled = 1;
    }
    while (filled < max_n) {
        corpus[filled + 1] = extend_by_one(corpus[filled], filled + 1);
        ++filled;
    }
    return corpus;
}

} // namespace graphspark
