#include "graphspark/linalg.hpp"

#include <random>

#include "graphspark/combinations.hpp"
#include "graphspark/forts.hpp"

namespace graphspark {
namespace {

// Fraction-free elimination on a working copy. Returns the rank; when `det`
// is non-null the input must be square and *det receives the determinant.
// Divisions are by previous pivots (exact over Q; integral inputs keep
// integral intermediates, which is the point of Bareiss).
int bareiss(RationalMatrix m, Rational* det) {
    const int rows = m.rows(), cols = m.cols();
    Rational prev(1);
    int sign = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            if (det) {
                *det = Rational(0);
                return r;
            }
            continue;
        }
        if (pivot != r) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
            sign = -sign;
        }
        const Rational p = m.at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m.at(i, j) = (p * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = Rational(0);
        }
        prev = p;
        ++r;
    }
    if (det) *det = r < rows ? Rational(0) : Rational(sign) * m.at(rows - 1, cols - 1);
    return r;
}

} // namespace

int rank(const RationalMatrix& a) { return bareiss(a, nullptr); }

int nullity(const RationalMatrix& a) { return a.cols() - rank(a); }

Rational determinant(const RationalMatrix& a) {
    if (!a.is_square()) throw DomainError("determinant requires a square matrix");
    Rational d;
    bareiss(a, &d);
    return d;
}

NullBasis null_basis(const RationalMatrix& a) {
    const int rows = a.rows(), cols = a.cols();
    RationalMatrix m = a;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Rational p = m.at(r, c);
        for (int j = 0; j < cols; ++j) m.at(r, j) /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Rational f = m.at(i, c);
            for (int j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }

    NullBasis basis;
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector x(cols);
        x[f] = Rational(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -m.at(static_cast<int>(i), f);
        if (!is_zero_vector(a.multiply(x)))
            throw std::logic_error("null basis vector failed exact verification");
        basis.vectors.push_back(std::move(x));
    }
    return basis;
}

void normalize_primitive(RationalVector& x) {
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& v : x) {
        if (v.is_zero()) continue;
        mpz_class den = v.denominator();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    for (auto& v : x) v *= Rational(lcm_den);
    for (const auto& v : x) {
        mpz_class num = v.numerator();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
    }
    if (gcd_num == 0) return;
    for (auto& v : x) v /= Rational(gcd_num);
    for (const auto& v : x) {
        if (v.is_zero()) continue;
        if (v.sign() < 0)
            for (auto& w : x) w = -w;
        break;
    }
}

SparkCertificate matrix_spark(const RationalMatrix& a, bool fort_pruning) {
    const int cols = a.cols();
    std::optional<Graph> pattern;
    if (fort_pruning && a.is_symmetric() && cols <= VertexSet::capacity())
        pattern = graph_of(a);

    SparkCertificate cert;
    for (int size = 1; size <= cols; ++size) {
        bool found = for_each_combination(cols, size, [&](const std::vector<int>& idx) {
            if (pattern) {
                VertexSet s;
                for (int v : idx) s.set(v);
                // Theorem: the support of a null vector of a symmetric matrix
                // is a fort of its pattern graph, so non-forts cannot carry a
                // minimal dependence.
                if (!is_fort(*pattern, s)) return false;
            }
            RationalMatrix sub = a.columns(idx);
            if (rank(sub) == size) return false;

            // First dependent subset: all smaller subsets are independent, so
            // the dependence is unique up to scale and fully supported.
            NullBasis nb = null_basis(sub);
            if (nb.dimension() != 1)
                throw std::logic_error("minimal dependent column set must carry a 1-dim null space");
            RationalVector witness(cols);
            for (int j = 0; j < size; ++j) witness[idx[j]] = nb.vectors[0][j];
            normalize_primitive(witness);
            cert.spark = size;
            for (int v : idx) cert.support.set(v);
            cert.witness = std::move(witness);
            if (support(cert.witness) != cert.support)
                throw std::logic_error("spark witness support mismatch");
            return true;
        });
        if (found) return cert;
    }
    cert.spark = cols + 1;
    return cert;
}

Graph graph_of(const RationalMatrix& a) {
    if (!a.is_symmetric()) throw DomainError("graph_of requires a symmetric matrix");
    Graph g(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero()) g.add_edge(i, j);
    return g;
}

FullSparkReport full_spark_check(const RationalMatrix& a) {
    if (!a.is_symmetric()) throw DomainError("full_spark_check requires a symmetric matrix");
    const int n = a.rows();
    FullSparkReport rep;
    rep.order = n;
    rep.rank = rank(a);
    const int k = rep.rank;

    SparkCertificate cert = matrix_spark(a);
    rep.spark = cert.spark;
    rep.spark_ok = rep.spark == k + 1;
    rep.full_spark = rep.spark_ok;

    if (k == n) {
        rep.nonsingular = true;
        rep.principal_ok = true;
        rep.null_minors_ok = true;
        rep.conditions_agree = true;
        return rep;
    }

    if (k == 0) {
        // Empty principal submatrices are nonsingular by convention.
        rep.principal_ok = true;
    } else {
        rep.principal_ok = !for_each_combination(n, k, [&](const std::vector<int>& idx) {
            if (determinant(a.submatrix(idx, idx)).is_zero()) {
                rep.violating_principal = idx;
                return true;
            }
            return false;
        });
    }

    NullBasis basis = null_basis(a);
    RationalMatrix x(n, n - k);
    for (int j = 0; j < n - k; ++j)
        for (int i = 0; i < n; ++i) x.at(i, j) = basis.vectors[j][i];
    rep.null_minors_ok = !for_each_combination(n, n - k, [&](const std::vector<int>& idx) {
        std::vector<int> all_cols(static_cast<std::size_t>(n - k));
        for (int j = 0; j < n - k; ++j) all_cols[j] = j;
        if (determinant(x.submatrix(idx, all_cols)).is_zero()) {
            rep.violating_null_rows = idx;
            return true;
        }
        return false;
    });

    rep.conditions_agree =
        rep.principal_ok == rep.null_minors_ok && rep.null_minors_ok == rep.spark_ok;

    if (n <= 12) {
        for (int size = 1; size < k; ++size) {
            for_each_combination(n, size, [&](const std::vector<int>& idx) {
                if (determinant(a.submatrix(idx, idx)).is_zero()) {
                    rep.singular_below_rank.push_back(idx);
                    return true; // first example per size is enough
                }
                return false;
            });
        }
    }
    return rep;
}

VertexClassification parter_fiedler(const RationalMatrix& a, int v) {
    if (!a.is_symmetric()) throw DomainError("parter_fiedler requires a symmetric matrix");
    if (v < 0 || v >= a.rows()) throw DomainError("vertex index out of range");
    if (a.rows() < 2) throw DomainError("parter_fiedler requires order >= 2");

    VertexClassification c;
    c.nullity_full = nullity(a);
    c.nullity_deleted = nullity(a.without_vertex(v));
    c.matrix_nonsingular = c.nullity_full == 0;
    if (c.nullity_deleted == c.nullity_full + 1)
        c.cls = VertexClass::parter;
    else if (c.nullity_deleted >= c.nullity_full)
        c.cls = VertexClass::fiedler_not_parter;
    else
        c.cls = VertexClass::neither;
    return c;
}

VertexSet null_support(const RationalMatrix& a) {
    VertexSet s;
    for (const auto& x : null_basis(a).vectors) s |= support(x);
    return s;
}

bool is_generic(const RationalMatrix& x, int limit) {
    const int r = x.rows(), c = x.cols();
    const int maxk = r < c ? r : c;
    if (maxk > limit)
        throw CapacityError("is_generic scans all square minors; min dimension " +
                            std::to_string(maxk) + " exceeds limit " + std::to_string(limit));
    for (int k = 1; k <= maxk; ++k) {
        bool singular = for_each_combination(r, k, [&](const std::vector<int>& ri) {
            return for_each_combination(c, k, [&](const std::vector<int>& ci) {
                return determinant(x.submatrix(ri, ci)).is_zero();
            });
        });
        if (singular) return false;
    }
    return true;
}

GenericNullityReport generic_nullity(const RationalMatrix& a, GenericNullityOptions opts) {
    GenericNullityReport rep;
    rep.nullity = nullity(a);
    if (rep.nullity == 0) {
        rep.note = "nullity 0: no nonzero null vectors";
        return rep;
    }
    if (rep.nullity > opts.limit)
        throw CapacityError("generic_nullity limited to nullity <= " + std::to_string(opts.limit));

    NullBasis basis = null_basis(a);
    const int n = a.cols(), d = rep.nullity;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> coeff(-opts.coeff_bound, opts.coeff_bound);

    for (int k = d; k >= 1; --k) {
        for (int trial = 0; trial < opts.trials; ++trial) {
            RationalMatrix x(n, k);
            for (int j = 0; j < k; ++j) {
                RationalVector combo(n);
                for (int b = 0; b < d; ++b) {
                    Rational cb(coeff(rng));
                    if (cb.is_zero()) continue;
                    for (int i = 0; i < n; ++i) combo[i] += cb * basis.vectors[b][i];
                }
                for (int i = 0; i < n; ++i) x.at(i, j) = combo[i];
            }
            if (is_generic(x, opts.limit)) {
                rep.certified = k;
                rep.certificate = std::move(x);
                rep.note = "certified GN >= " + std::to_string(k) +
                           " by randomized basis recombination (" +
                           std::to_string(opts.trials) + " trials/size, coefficients in [-" +
                           std::to_string(opts.coeff_bound) + "," +
                           std::to_string(opts.coeff_bound) + "], seed " +
                           std::to_string(opts.seed) + ")";
                return rep;
            }
        }
    }
    rep.note = "no generic null matrix found; GN lower bound 0";
    return rep;
}

bool is_positive_semidefinite(const RationalMatrix& a) {
    if (!a.is_symmetric()) throw DomainError("PSD check requires a symmetric matrix");
    RationalMatrix m = a;
    const int n = m.rows();
    for (int i = 0; i < n; ++i) {
        const Rational d = m.at(i, i);
        if (d.sign() < 0) return false;
        if (d.is_zero()) {
            // A PSD matrix with a zero diagonal entry has a zero row in the
            // remaining block.
            for (int j = i + 1; j < n; ++j)
                if (!m.at(i, j).is_zero()) return false;
            continue;
        }
        for (int j = i + 1; j < n; ++j) {
            if (m.at(j, i).is_zero()) continue;
            const Rational f = m.at(j, i) / d;
            for (int k = i + 1; k < n; ++k) m.at(j, k) -= f * m.at(i, k);
        }
    }
    return true;
}

} // namespace graphspark
