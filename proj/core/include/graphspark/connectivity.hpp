#pragma once

#include <optional>

#include "graphspark/graph.hpp"

namespace graphspark {

/// Vertex connectivity kappa(G). Returns 0 for disconnected input and n-1
/// for complete graphs (no cut set exists; standard convention). Requires
/// n >= 2 for a meaningful answer; n = 1 returns 0 by the same convention.
int vertex_connectivity(const Graph& g);

/// A minimum vertex cut certifying kappa(G): removing it disconnects the
/// graph. nullopt for complete graphs (including n <= 1); the empty set for
/// disconnected input.
std::optional<VertexSet> min_vertex_cut(const Graph& g);

} // namespace graphspark
