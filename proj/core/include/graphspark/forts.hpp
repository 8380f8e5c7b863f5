#pragma once

#include <functional>
#include <string>
#include <vector>

#include "graphspark/graph.hpp"

namespace graphspark {

/// Default cap for exhaustive fort enumeration (2^n subsets).
inline constexpr int kFortEnumLimit = 16;

/// Fort predicate: f is nonempty and no vertex outside f is adjacent to
/// exactly one vertex of f. The empty set is not a fort. Throws DomainError
/// if f contains out-of-range vertices.
bool is_fort(const Graph& g, const VertexSet& f);

/// Closure of an initial blue set under the standard color change rule
/// (a blue vertex with a unique white neighbor forces it blue). The closure
/// is a fixed point and independent of the order forces are applied in.
VertexSet zf_closure(const Graph& g, VertexSet blue);

bool is_zero_forcing_set(const Graph& g, const VertexSet& blue);

enum class SparkMethod { brute_force, branch_and_bound };

inline const char* to_string(SparkMethod m) {
    return m == SparkMethod::brute_force ? "brute_force" : "branch_and_bound";
}

/// Minimum fort with certificate. The search certifies that no smaller fort
/// exists; ties are broken toward the lexicographically smallest vertex set.
struct FortReport {
    VertexSet minimum_fort;
    int size = 0;
    SparkMethod method = SparkMethod::branch_and_bound;
};

/// spark(G) = minimum fort cardinality (= zero blocking number
/// = n - failed zero forcing number). An isolated vertex yields spark 1 with
/// the lowest isolated vertex as the fort; disconnected graphs are searched
/// whole, which minimizes over components. branch_and_bound runs
/// iterative deepening over the fort size with constraint propagation;
/// brute_force scans subsets by increasing cardinality.
FortReport spark(const Graph& g, SparkMethod method = SparkMethod::branch_and_bound);

/// Fort counts by cardinality: counts[k] = number of forts with k vertices,
/// k = 0..n (counts[0] = 0 always; counts[1] = number of isolated vertices).
struct FortSequence {
    int n = 0;
    std::vector<long long> counts;

    long long total() const {
        long long t = 0;
        for (auto c : counts) t += c;
        return t;
    }
};

/// Exhaustive enumeration; streams subset masks and keeps counts only.
/// Throws CapacityError for n > limit, advising branch-and-bound spark.
FortSequence fort_sequence(const Graph& g, int limit = kFortEnumLimit);

/// Visits every fort once (increasing cardinality not guaranteed; mask
/// order). `materialize_limit` guards callers that collect all forts.
void enumerate_forts(const Graph& g, const std::function<void(const VertexSet&)>& visit,
                     int limit = kFortEnumLimit);

/// failed(G) = n - spark(G): the largest size of a vertex subset that is not
/// a zero forcing set.
int failed_zero_forcing_number(const Graph& g);

} // namespace graphspark
