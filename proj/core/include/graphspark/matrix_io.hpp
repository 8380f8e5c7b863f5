#pragma once

#include <iosfwd>
#include <string>

#include "graphspark/rational_matrix.hpp"

namespace graphspark {

/// Plain-text dense format: one row per line, whitespace-separated entries,
/// each an integer or "p/q". Blank lines and lines starting with '#' are
/// skipped. All rows must have the same length.
RationalMatrix parse_matrix_text(const std::string& text);
RationalMatrix read_matrix_file(const std::string& path);

std::string matrix_to_text(const RationalMatrix& a);

/// JSON mirror: {"rows": r, "cols": c, "entries": [["1","-1/2",...],...]}.
std::string matrix_to_json(const RationalMatrix& a);
RationalMatrix matrix_from_json(const std::string& json_text);

std::string vector_to_text(const RationalVector& x);

/// Comma-separated rationals ("1,-1,0" or "1/2,3").
RationalVector parse_vector(const std::string& text);

} // namespace graphspark
