#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphspark {

/// Malformed textual input (graph6, matrix files, family specs).
/// `offset` is the byte offset of the first offending character, or npos
/// when the error is not tied to a single byte.
class ParseError : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ParseError(const std::string& what, std::size_t offset = npos)
        : std::runtime_error(offset == npos
                                 ? what
                                 : what + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Input violates a documented precondition (out-of-range vertex, invalid
/// family parameters, non-symmetric matrix where symmetry is required, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured exhaustive limit (fort enumeration, generic
/// minor scans). The message names the limit and the cheaper alternative.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction postcondition failed at runtime. Should be unreachable for
/// valid inputs; the message names the offending entry.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace graphspark
