#pragma once

#include <cstdint>
#include <random>

#include "graphspark/graph.hpp"
#include "graphspark/rational_matrix.hpp"

namespace graphspark {

/// Stateless mixer for deriving independent per-item seeds; keeps randomized
/// corpora deterministic regardless of worker count.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Erdos-Renyi p=1/2 plus random patch edges until connected.
Graph random_connected_graph(std::mt19937_64& rng, int n);

/// Random graph on n vertices (not necessarily connected), each edge with
/// probability 1/2.
Graph random_graph(std::mt19937_64& rng, int n);

/// Uniform random labelled tree (Pruefer decode).
Graph random_tree(std::mt19937_64& rng, int n);

/// Random symmetric integer matrix with free pattern: entries uniform in
/// [-bound, bound] (zeros allowed anywhere).
RationalMatrix random_symmetric_matrix(std::mt19937_64& rng, int n, int bound = 9);

/// Random member of S(g): nonzero integers on edges, anything on the
/// diagonal, zero elsewhere.
RationalMatrix random_matrix_in_pattern(std::mt19937_64& rng, const Graph& g, int bound = 9);

/// Exact diagonal tweak toward singularity: det(A) is affine in each
/// diagonal entry, so a_ii -= det(A)/det(A(i)) zeroes it whenever some
/// det(A(i)) is nonzero. The pattern is unchanged (diagonal is free).
/// Returns false when no such i exists (and A stays nonsingular).
bool make_singular_by_diagonal(RationalMatrix& a);

/// Random singular symmetric matrix (free pattern); resamples until the
/// diagonal tweak succeeds.
RationalMatrix random_singular_symmetric(std::mt19937_64& rng, int n, int bound = 9);

/// Random singular member of S(g); diagonal tweak with resampling.
RationalMatrix random_singular_in_pattern(std::mt19937_64& rng, const Graph& g, int bound = 9);

/// Random Gram matrix B^T B (positive semidefinite by construction) with B
/// of random row count 1..n.
RationalMatrix random_gram(std::mt19937_64& rng, int n, int bound = 3);

/// Random symmetric matrix with nullity >= 2, sampled as V D V^T with
/// k <= n-2 columns and resampled until rank <= n-2.
RationalMatrix random_corank2_symmetric(std::mt19937_64& rng, int n, int bound = 3);

} // namespace graphspark
