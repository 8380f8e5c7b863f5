#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphspark/graph.hpp"
#include "graphspark/rational_matrix.hpp"

namespace graphspark {

/// Exact rank via fraction-free (Bareiss) elimination with pivoting on exact
/// nonzeroness. Works for rectangular input.
int rank(const RationalMatrix& a);

int nullity(const RationalMatrix& a);

/// Exact determinant (Bareiss). DomainError for non-square input.
Rational determinant(const RationalMatrix& a);

/// Basis of the null space, computed by exact reduced row echelon form.
/// Every vector satisfies A*x = 0 exactly (verified before returning).
struct NullBasis {
    std::vector<RationalVector> vectors;
    int dimension() const { return static_cast<int>(vectors.size()); }
};
NullBasis null_basis(const RationalMatrix& a);

/// spark(A) with certificate. `spark` is the smallest number of linearly
/// dependent columns, or cols+1 when all columns are independent (the
/// nonsingular convention); in the dependent case `witness` is a primitive
/// integer null vector supported exactly on `support`.
struct SparkCertificate {
    int spark = 0;
    VertexSet support;
    RationalVector witness;
};

/// Subsets are scanned by increasing size, lexicographically within a size,
/// so the certificate support is the lexicographically least among minimum
/// supports. For symmetric input the scan skips column sets that are not
/// forts of the pattern graph (a null-vector support is always a fort),
/// which is a large and provably safe pruning; disable to get the naive
/// oracle behavior.
SparkCertificate matrix_spark(const RationalMatrix& a, bool fort_pruning = true);

/// Pattern graph of a symmetric matrix: edges at off-diagonal nonzeros.
/// DomainError for non-symmetric input.
Graph graph_of(const RationalMatrix& a);

/// full-spark test (spark = rank + 1) with cross-validated diagnostics.
/// For singular input the three equivalent conditions are each computed
/// independently:
///   principal_ok   - every k x k principal submatrix is nonsingular
///   null_minors_ok - every (n-k) x (n-k) row submatrix of a null basis is
///                    nonsingular
///   spark_ok       - spark(A) = k + 1
/// A violating submatrix, when one exists, is reported by its row set.
/// Singular principal submatrices of sizes below k are allowed for full
/// spark matrices; the smallest example per size is listed as a diagnostic
/// (computed for n <= 12).
struct FullSparkReport {
    bool full_spark = false;
    int order = 0;
    int rank = 0;
    int spark = 0;
    bool nonsingular = false;
    bool principal_ok = false;
    bool null_minors_ok = false;
    bool spark_ok = false;
    bool conditions_agree = false;
    std::optional<std::vector<int>> violating_principal;
    std::optional<std::vector<int>> violating_null_rows;
    std::vector<std::vector<int>> singular_below_rank;
};
FullSparkReport full_spark_check(const RationalMatrix& a);

/// Vertex classification by exact nullities of A and A(v):
///   parter             nul(A(v)) = nul(A) + 1
///   fiedler_not_parter nul(A(v)) >= nul(A), not Parter
///   neither            nul(A(v)) < nul(A)
/// For nonsingular A the Fiedler condition holds vacuously; the report flags
/// that case rather than refusing it.
enum class VertexClass { parter, fiedler_not_parter, neither };

inline const char* to_string(VertexClass c) {
    switch (c) {
        case VertexClass::parter: return "parter";
        case VertexClass::fiedler_not_parter: return "fiedler_not_parter";
        default: return "neither";
    }
}

struct VertexClassification {
    VertexClass cls = VertexClass::neither;
    int nullity_full = 0;
    int nullity_deleted = 0;
    bool matrix_nonsingular = false;
    bool is_fiedler() const { return cls != VertexClass::neither; }
};
VertexClassification parter_fiedler(const RationalMatrix& a, int v);

/// supp N(A): indices i with x_i != 0 for some null vector x. Computed as
/// the union of supports over a null basis (basis independent).
VertexSet null_support(const RationalMatrix& a);

inline constexpr int kGenericMinorLimit = 6;

/// True iff every square submatrix (all sizes) is nonsingular. Exhaustive;
/// CapacityError when min(rows, cols) exceeds `limit`.
bool is_generic(const RationalMatrix& x, int limit = kGenericMinorLimit);

/// Lower-bound certification of the generic nullity
/// GN(A) = max{ k : some n x k matrix X with AX = 0 is generic }.
/// The maximum is not finitely decidable by enumeration, so candidate X are
/// drawn as random integer recombinations of a null basis (coefficients in
/// [-coeff_bound, coeff_bound], deterministic seed); `certified` carries
/// "GN(A) >= certified" semantics and `certificate` is the generic witness.
struct GenericNullityOptions {
    int limit = kGenericMinorLimit;
    long coeff_bound = 100;
    int trials = 32;
    std::uint64_t seed = 0;
};

struct GenericNullityReport {
    int certified = 0;
    int nullity = 0;
    std::optional<RationalMatrix> certificate;
    std::string note;
};
GenericNullityReport generic_nullity(const RationalMatrix& a, GenericNullityOptions opts = {});

/// Exact LDL^T positive-semidefiniteness check (optional diagnostic; PSD
/// inputs elsewhere are accepted as caller claims). DomainError for
/// non-symmetric input.
bool is_positive_semidefinite(const RationalMatrix& a);

/// Scales to the primitive integer representative with positive leading
/// nonzero entry; no-op on the zero vector.
void normalize_primitive(RationalVector& x);

} // namespace graphspark
