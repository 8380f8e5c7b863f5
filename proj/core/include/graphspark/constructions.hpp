#pragma once

#include "graphspark/graph.hpp"
#include "graphspark/linalg.hpp"
#include "graphspark/rational_matrix.hpp"

namespace graphspark {

RationalMatrix adjacency(const Graph& g);

/// Combinatorial Laplacian D - A; singular (row sums zero) for every graph.
RationalMatrix laplacian(const Graph& g);

/// A prescribed nonzero value per fort vertex (ascending vertex order).
/// Defaults to all ones when `values` is empty.
struct FortVectorAssignment {
    VertexSet fort;
    RationalVector values;

    /// The full n-length vector: the values on the fort, zero elsewhere.
    RationalVector expand(int n) const;
};

/// Builds A in S(g) with the prescribed null vector x (supported exactly on
/// the fort): starts from the adjacency matrix; for every outside vertex i
/// with fort neighbors B_i rewrites the i-row entries to 1/x_j, with
/// (1-|B_i|)/x_j at j = max B_i; then sets the diagonal on supp(x) so that
/// (Ax)_k = 0. |B_i| is never 1 (fort property) so no off-diagonal entry is
/// zeroed; an outside vertex with no fort neighbors keeps its row unchanged.
/// Throws DomainError when the set is not a fort or a value is zero;
/// ConstructionError (naming the entry) if a postcondition check ever fails.
RationalMatrix matrix_from_fort(const Graph& g, const FortVectorAssignment& fva);

/// Bordered matrix [[x^T A x, x^T A], [A x, A]]: rank(B) = rank(A) and
/// (-1, x) is a null vector of B, so spark(B) <= |supp(x)| + 1 (with
/// equality when A is nonsingular).
RationalMatrix border(const RationalMatrix& a, const RationalVector& x);

/// For symmetric A with rank k < n-1: returns B = A + E_jj with
/// rank(B) = k+1, spark(B) = spark(A), same pattern graph. j is chosen in
/// supp(eta2) \ supp(eta1) where eta1 is the lexicographically least
/// minimum-support null vector and eta2 the first extension-basis vector;
/// both the choice and the resulting null space are verified exactly.
RationalMatrix rank_bump(const RationalMatrix& a);

} // namespace graphspark
