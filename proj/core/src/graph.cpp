#include "graphspark/graph.hpp"

namespace graphspark {

std::optional<std::pair<int, int>> duplicate_vertices(const Graph& g) {
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) {
                if (g.closed_neighborhood(u) == g.closed_neighborhood(v))
                    return std::make_pair(u, v);
            } else {
                if (g.neighbors(u) == g.neighbors(v)) return std::make_pair(u, v);
            }
        }
    }
    return std::nullopt;
}

} // namespace graphspark
