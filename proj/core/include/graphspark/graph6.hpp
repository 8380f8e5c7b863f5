#pragma once

#include <string>
#include <string_view>

#include "graphspark/graph.hpp"

namespace graphspark {

/// Decodes one graph6 line (the de facto standard format: 63-offset printable
/// bytes, upper-triangle bits in column order). Accepts an optional
/// ">>graph6<<" header prefix. Throws ParseError naming the byte offset for
/// malformed headers, characters outside 63..126, truncated or overlong bit
/// bodies; CapacityError when the encoded order exceeds the vertex-set
/// capacity; DomainError for the order-0 graph.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding (shortest header form, zero padding).
std::string encode_graph6(const Graph& g);

} // namespace graphspark
