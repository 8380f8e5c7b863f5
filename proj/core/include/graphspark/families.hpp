#pragma once

#include <string>
#include <vector>

#include "graphspark/graph.hpp"

namespace graphspark {

/// Named graph family, parsed from the CLI syntax:
///   path:5  cycle:4  complete:6  kbip:2,3  spider:4,1,1  friendship:3
///   hypercube3  cart:(cycle:4)x(path:2)
/// Cartesian products nest: cart:(cart:(path:2)x(path:2))x(path:2).
struct FamilySpec {
    enum class Kind {
        path,
        cycle,
        complete,
        complete_bipartite,
        spider,
        friendship,
        hypercube3,
        cartesian,
    };

    Kind kind = Kind::path;
    std::vector<int> params;
    std::vector<FamilySpec> factors; // exactly two for cartesian

    static FamilySpec parse(std::string_view text);

    /// True when `text` is syntactically a family spec (used by the CLI to
    /// distinguish family arguments from graph6 strings and file paths).
    static bool looks_like(std::string_view text);

    std::string str() const;
};

/// Builds the graph for a family spec. Vertex numbering follows the paper's
/// figures: spider = center, then legs in order; friendship = center, then
/// triangle pairs; cartesian(G,H) numbers (u,v) as u*|H|+v. Throws
/// DomainError for invalid parameters (cycle below 3, spider with fewer than
/// 3 legs, ...).
Graph generate(const FamilySpec& spec);

} // namespace graphspark
