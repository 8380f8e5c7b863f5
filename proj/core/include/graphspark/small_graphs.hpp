#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "graphspark/graph.hpp"

namespace graphspark {

/// Canonical form of a graph on n <= 11 vertices: the maximum, over all
/// vertex orderings, of the upper-triangle adjacency bit string (column
/// order). Two graphs are isomorphic iff their codes are equal.
std::uint64_t canonical_code(const Graph& g);

/// Connected graphs up to isomorphism, one representative per class,
/// generated by canonical augmentation: every connected graph on n vertices
/// is some connected (n-1)-vertex graph plus a vertex joined to a nonempty
/// neighborhood. corpus[n] holds order-n graphs sorted by canonical code;
/// corpus[0] is empty. Levels up to max_n are built once per process and
/// cached; already-built levels are never touched again, so references stay
/// valid across later calls (max_n <= 8; the class counts 1, 1, 2, 6, 21,
/// 112, 853, 11117 are verified by tests).
const std::array<std::vector<Graph>, 9>& connected_graph_corpus(int max_n);

/// Known counts of connected graphs up to isomorphism for n = 1..8.
inline constexpr long long kConnectedGraphCounts[8] = {1, 1, 2, 6, 21, 112, 853, 11117};

} // namespace graphspark
