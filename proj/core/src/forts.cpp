#include "graphspark/forts.hpp"

#include <algorithm>

#include "graphspark/combinations.hpp"

namespace graphspark {

bool is_fort(const Graph& g, const VertexSet& f) {
    if (!g.vertices().contains(f))
        throw DomainError("fort candidate contains out-of-range vertices");
    if (f.empty()) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (f.test(v)) continue;
        if (intersection_size(g.neighbors(v), f) == 1) return false;
    }
    return true;
}

VertexSet zf_closure(const Graph& g, VertexSet blue) {
    if (!g.vertices().contains(blue))
        throw DomainError("initial blue set contains out-of-range vertices");
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : blue) {
            VertexSet white = g.neighbors(v) - blue;
            if (white.count() == 1) {
                blue.set(white.lowest());
                changed = true;
            }
        }
    }
    return blue;
}

bool is_zero_forcing_set(const Graph& g, const VertexSet& blue) {
    return zf_closure(g, blue) == g.vertices();
}

namespace {

// Iterative-deepening search for a fort of exactly `target` vertices.
// Three vertex states: in, out, undecided. The fort condition ("no outside
// vertex sees exactly one inside vertex") propagates on out-vertices:
//   - 1 in-neighbor, 0 undecided neighbors  -> dead end
//   - 1 in-neighbor, 1 undecided neighbor   -> that neighbor is forced in
//   - 0 in-neighbors, 1 undecided neighbor  -> that neighbor is forced out
// Branching picks the lowest undecided vertex, "in" before "out", so the
// first fort found is the lexicographically smallest of the target size.
class FortSearch {
public:
    FortSearch(const Graph& g, int target) : g_(g), n_(g.order()), target_(target) {}

    bool run(VertexSet& found) {
        VertexSet in, out;
        if (!dfs(in, out)) return false;
        found = result_;
        return true;
    }

private:
    // Returns false on contradiction. in/out are updated in place.
    bool propagate(VertexSet& in, VertexSet& out) {
        bool changed = true;
        while (changed) {
            changed = false;
            int in_count = in.count();
            int und_count = n_ - in_count - out.count();
            if (in_count > target_ || in_count + und_count < target_) return false;
            if (in_count == target_ && und_count > 0) {
                out |= g_.vertices() - in - out;
                changed = true;
                continue;
            }
            if (in_count + und_count == target_ && und_count > 0) {
                in |= g_.vertices() - in - out;
                changed = true;
                continue;
            }
            for (int v : out) {
                VertexSet und_nb = g_.neighbors(v) - in - out;
                int t = intersection_size(g_.neighbors(v), in);
                int u = und_nb.count();
                if (t == 1) {
                    if (u == 0) return false;
                    if (u == 1) {
                        in.set(und_nb.lowest());
                        changed = true;
                    }
                } else if (t == 0 && u == 1) {
                    out.set(und_nb.lowest());
                    changed = true;
                }
            }
        }
        return true;
    }

    bool dfs(VertexSet in, VertexSet out) {
        if (!propagate(in, out)) return false;
        VertexSet und = g_.vertices() - in - out;
        if (und.empty()) {
            if (in.count() != target_ || !is_fort(g_, in)) return false;
            result_ = in;
            return true;
        }
        int v = und.lowest();
        {
            VertexSet in2 = in;
            in2.set(v);
            if (dfs(in2, out)) return true;
        }
        out.set(v);
        return dfs(in, out);
    }

    const Graph& g_;
    int n_;
    int target_;
    VertexSet result_;
};

FortReport spark_bnb(const Graph& g) {
    for (int size = 2; size <= g.order(); ++size) {
        FortSearch search(g, size);
        VertexSet found;
        if (search.run(found)) return {found, size, SparkMethod::branch_and_bound};
    }
    // Unreachable: V(G) is always a fort.
    throw std::logic_error("fort search found no fort up to size n");
}

FortReport spark_brute(const Graph& g) {
    const int n = g.order();
    for (int size = 2; size <= n; ++size) {
        VertexSet found;
        bool ok = for_each_combination(n, size, [&](const std::vector<int>& idx) {
            VertexSet f;
            for (int v : idx) f.set(v);
            if (is_fort(g, f)) {
                found = f;
                return true;
            }
            return false;
        });
        if (ok) return {found, size, SparkMethod::brute_force};
    }
    throw std::logic_error("brute-force fort scan found no fort up to size n");
}

} // namespace

FortReport spark(const Graph& g, SparkMethod method) {
    if (auto iso = g.isolated_vertex()) {
        // spark(G) = 1 iff G has an isolated vertex; the vertex itself is
        // the fort.
        return {VertexSet::single(*iso), 1, method};
    }
    return method == SparkMethod::brute_force ? spark_brute(g) : spark_bnb(g);
}

FortSequence fort_sequence(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit)
        throw CapacityError("fort_sequence is exhaustive and limited to n <= " +
                            std::to_string(limit) +
                            "; use spark() (branch-and-bound) for larger graphs");
    FortSequence seq;
    seq.n = n;
    seq.counts.assign(n + 1, 0);
    enumerate_forts(g, [&](const VertexSet& f) { ++seq.counts[f.count()]; }, limit);
    return seq;
}

void enumerate_forts(const Graph& g, const std::function<void(const VertexSet&)>& visit,
                     int limit) {
    const int n = g.order();
    if (n > limit)
        throw CapacityError("fort enumeration is limited to n <= " + std::to_string(limit));
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        VertexSet f;
        std::uint64_t m = mask;
        while (m) {
            int v = std::countr_zero(m);
            f.set(v);
            m &= m - 1;
        }
        bool fort = true;
        for (int v = 0; v < n && fort; ++v)
            if (!f.test(v) && intersection_size(g.neighbors(v), f) == 1) fort = false;
        if (fort) visit(f);
    }
}

int failed_zero_forcing_number(const Graph& g) { return g.order() - spark(g).size; }

} // namespace graphspark
