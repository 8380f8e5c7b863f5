#include "graphspark/constructions.hpp"

#include "graphspark/forts.hpp"

namespace graphspark {

RationalMatrix adjacency(const Graph& g) {
    RationalMatrix a(g.order(), g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j : g.neighbors(i)) a.at(i, j) = Rational(1);
    return a;
}

RationalMatrix laplacian(const Graph& g) {
    RationalMatrix a(g.order(), g.order());
    for (int i = 0; i < g.order(); ++i) {
        a.at(i, i) = Rational(g.degree(i));
        for (int j : g.neighbors(i)) a.at(i, j) = Rational(-1);
    }
    return a;
}

RationalVector FortVectorAssignment::expand(int n) const {
    RationalVector x(n);
    auto members = fort.to_vector();
    if (values.empty()) {
        for (int v : members) x[v] = Rational(1);
        return x;
    }
    if (values.size() != members.size())
        throw DomainError("fort vector assignment size mismatch");
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (values[i].is_zero())
            throw DomainError("fort vector values must be nonzero on the fort");
        x[members[i]] = values[i];
    }
    return x;
}

RationalMatrix matrix_from_fort(const Graph& g, const FortVectorAssignment& fva) {
    if (!is_fort(g, fva.fort)) throw DomainError("the given vertex set is not a fort");
    const int n = g.order();
    RationalVector x = fva.expand(n);

    RationalMatrix a = adjacency(g);
    for (int i = 0; i < n; ++i) {
        if (fva.fort.test(i)) continue;
        VertexSet bi = g.neighbors(i) & fva.fort;
        const int b = bi.count();
        if (b == 0) continue; // no fort neighbors: row stays adjacency
        int jmax = -1;
        for (int j : bi) jmax = j;
        for (int j : bi) {
            Rational val = (j == jmax) ? Rational(1 - b) / x[j] : Rational(1) / x[j];
            if (val.is_zero())
                throw ConstructionError("pattern violation at entry (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
            a.at(i, j) = val;
            a.at(j, i) = val;
        }
    }
    for (int k : fva.fort) {
        Rational acc;
        for (int j = 0; j < n; ++j)
            if (j != k) acc += a.at(k, j) * x[j];
        a.at(k, k) = -acc / x[k];
    }

    if (graph_of(a) != g)
        throw ConstructionError("constructed matrix pattern does not match the graph");
    if (!is_zero_vector(a.multiply(x)))
        throw ConstructionError("constructed matrix does not annihilate the fort vector");
    return a;
}

RationalMatrix border(const RationalMatrix& a, const RationalVector& x) {
    if (!a.is_symmetric()) throw DomainError("border requires a symmetric matrix");
    const int n = a.rows();
    if (static_cast<int>(x.size()) != n) throw DomainError("border vector dimension mismatch");

    RationalVector ax = a.multiply(x);
    Rational xax;
    for (int i = 0; i < n; ++i) xax += x[i] * ax[i];

    RationalMatrix b(n + 1, n + 1);
    b.at(0, 0) = xax;
    for (int i = 0; i < n; ++i) {
        b.at(0, i + 1) = ax[i];
        b.at(i + 1, 0) = ax[i];
        for (int j = 0; j < n; ++j) b.at(i + 1, j + 1) = a.at(i, j);
    }
    return b;
}

RationalMatrix rank_bump(const RationalMatrix& a) {
    if (!a.is_symmetric()) throw DomainError("rank_bump requires a symmetric matrix");
    const int n = a.rows();
    const int k = rank(a);
    if (k >= n - 1)
        throw DomainError("rank_bump requires rank < n-1 (nullity at least 2)");

    SparkCertificate cert = matrix_spark(a);
    const RationalVector& eta1 = cert.witness;

    // Extend eta1 to a null space basis; every other member has support not
    // contained in supp(eta1), otherwise a shorter-support null vector would
    // exist.
    NullBasis nb = null_basis(a);
    std::vector<RationalVector> basis{eta1};
    for (const auto& v : nb.vectors) {
        if (static_cast<int>(basis.size()) == n - k) break;
        RationalMatrix span(n, static_cast<int>(basis.size()) + 1);
        for (std::size_t c = 0; c < basis.size(); ++c)
            for (int i = 0; i < n; ++i) span.at(i, static_cast<int>(c)) = basis[c][i];
        for (int i = 0; i < n; ++i) span.at(i, static_cast<int>(basis.size())) = v[i];
        if (rank(span) == static_cast<int>(basis.size()) + 1) basis.push_back(v);
    }
    if (static_cast<int>(basis.size()) != n - k)
        throw std::logic_error("failed to extend the spark witness to a null basis");

    const RationalVector& eta2 = basis[1];
    VertexSet extra = support(eta2) - support(eta1);
    if (extra.empty())
        throw std::logic_error("no coordinate in supp(eta2) outside supp(eta1)");
    const int j = extra.lowest();

    RationalMatrix b = a;
    b.at(j, j) += Rational(1);

    // The recombined vectors eta_i' = (y_ij / y_2j) * eta2 - eta_i vanish at
    // j and must stay in the null space of B, together with eta1.
    if (!is_zero_vector(b.multiply(eta1)))
        throw std::logic_error("rank_bump lost the minimum-support null vector");
    for (std::size_t i = 2; i < basis.size(); ++i) {
        RationalVector prime(n);
        Rational f = basis[i][j] / eta2[j];
        for (int t = 0; t < n; ++t) prime[t] = f * eta2[t] - basis[i][t];
        if (!is_zero_vector(b.multiply(prime)))
            throw std::logic_error("rank_bump recombined null vector check failed");
    }

    if (rank(b) != k + 1) throw std::logic_error("rank_bump did not raise the rank by one");
    if (matrix_spark(b).spark != cert.spark)
        throw std::logic_error("rank_bump changed the spark");
    if (graph_of(b) != graph_of(a))
        throw std::logic_error("rank_bump changed the pattern graph");
    return b;
}

} // namespace graphspark
