#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphspark {

/// Corpus selector for a verification suite. `defaulted` runs the suite's
/// documented corpus; the others override size, bound, seed, or source.
struct CorpusSpec {
    enum class Kind { defaulted, exhaustive, file, random };
    Kind kind = Kind::defaulted;
    int max_n = 0;          // exhaustive bound / random graph order cap
    long count = 0;         // random corpus size
    std::uint64_t seed = 0; // randomized suites; printed for replay
    std::string path;       // graph6 lines, or matrix blocks for 4.2
};

struct Violation {
    long index = 0;     // corpus position, for replay
    std::string item;   // graph6 string or matrix text
    std::string detail; // what failed
};

struct VerifyReport {
    std::string suite;
    std::string corpus; // human-readable description incl. seed
    long cases = 0;
    std::vector<Violation> violations;
    double elapsed_sec = 0;
    std::uint64_t seed = 0;

    bool pass() const { return violations.empty(); }
    std::string text() const;
    std::string json() const;
};

/// Known suite ids, in documentation order.
const std::vector<std::string>& verify_suites();

std::string verify_suite_description(const std::string& suite);

/// Runs one suite. Unknown suite or unreadable corpus throws DomainError /
/// ParseError. Deterministic for a fixed seed; items are processed in
/// parallel (threads = 0 means GRAPHSPARK_THREADS / hardware default) with
/// order-independent aggregation.
VerifyReport run_verify(const std::string& suite, const CorpusSpec& corpus = {},
                        int threads = 0);

} // namespace graphspark
