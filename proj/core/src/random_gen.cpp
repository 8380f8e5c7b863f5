#include "graphspark/random_gen.hpp"

#include <algorithm>
#include <numeric>

#include "graphspark/linalg.hpp"

namespace graphspark {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Graph random_graph(std::mt19937_64& rng, int n) {
    Graph g(n);
    std::bernoulli_distribution edge(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(std::mt19937_64& rng, int n) {
    Graph g = random_graph(rng, n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (!g.is_connected()) {
        VertexSet comp = g.component_of(0);
        VertexSet rest = g.vertices() - comp;
        auto inside = comp.to_vector();
        auto outside = rest.to_vector();
        int u = inside[static_cast<std::size_t>(pick(rng)) % inside.size()];
        int v = outside[static_cast<std::size_t>(pick(rng)) % outside.size()];
        g.add_edge(u, v);
    }
    return g;
}

Graph random_tree(std::mt19937_64& rng, int n) {
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (auto& p : pruefer) p = pick(rng);

    std::vector<int> deg(n, 1);
    for (int p : pruefer) ++deg[p];
    for (int p : pruefer) {
        int leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        g.add_edge(leaf, p);
        deg[leaf] = 0;
        --deg[p];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) (a < 0 ? a : b) = v;
    g.add_edge(a, b);
    return g;
}

RationalMatrix random_symmetric_matrix(std::mt19937_64& rng, int n, int bound) {
    std::uniform_int_distribution<int> val(-bound, bound);
    RationalMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        a.at(i, i) = Rational(val(rng));
        for (int j = i + 1; j < n; ++j) {
            Rational v(val(rng));
            a.at(i, j) = v;
            a.at(j, i) = v;
        }
    }
    return a;
}

RationalMatrix random_matrix_in_pattern(std::mt19937_64& rng, const Graph& g, int bound) {
    std::uniform_int_distribution<int> any(-bound, bound);
    std::uniform_int_distribution<int> nz(1, 2 * bound);
    const int n = g.order();
    RationalMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        a.at(i, i) = Rational(any(rng));
        for (int j : g.neighbors(i)) {
            if (j < i) continue;
            int v = nz(rng);
            Rational r(v > bound ? bound - v : v); // nonzero in [-bound, bound]
            a.at(i, j) = r;
            a.at(j, i) = r;
        }
    }
    return a;
}

bool make_singular_by_diagonal(RationalMatrix& a) {
    Rational d = determinant(a);
    if (d.is_zero()) return true;
    if (a.rows() == 1) {
        a.at(0, 0) = Rational(0);
        return true;
    }
    for (int i = 0; i < a.rows(); ++i) {
        Rational di = determinant(a.without_vertex(i));
        if (!di.is_zero()) {
            a.at(i, i) -= d / di;
            return true;
        }
    }
    return false;
}

RationalMatrix random_singular_symmetric(std::mt19937_64& rng, int n, int bound) {
    for (;;) {
        RationalMatrix a = random_symmetric_matrix(rng, n, bound);
        if (make_singular_by_diagonal(a)) return a;
    }
}

RationalMatrix random_singular_in_pattern(std::mt19937_64& rng, const Graph& g, int bound) {
    for (;;) {
        RationalMatrix a = random_matrix_in_pattern(rng, g, bound);
        if (make_singular_by_diagonal(a)) return a;
    }
}

RationalMatrix random_gram(std::mt19937_64& rng, int n, int bound) {
    std::uniform_int_distribution<int> rows(1, n);
    std::uniform_int_distribution<int> val(-bound, bound);
    const int r = rows(rng);
    RationalMatrix b(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = Rational(val(rng));
    RationalMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational acc;
            for (int k = 0; k < r; ++k) acc += b.at(k, i) * b.at(k, j);
            a.at(i, j) = acc;
            a.at(j, i) = acc;
        }
    return a;
}

RationalMatrix random_corank2_symmetric(std::mt19937_64& rng, int n, int bound) {
    if (n < 3) throw DomainError("corank-2 sampling needs n >= 3");
    std::uniform_int_distribution<int> kd(1, n - 2);
    std::uniform_int_distribution<int> val(-bound, bound);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (;;) {
        // A = sum_t d_t v_t v_t^T has rank <= k; mixed signs can drop it
        // further, which is fine (any rank <= n-2 qualifies).
        const int k = kd(rng);
        RationalMatrix v(n, k);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < k; ++j) v.at(i, j) = Rational(val(rng));
        std::vector<int> d(static_cast<std::size_t>(k));
        for (auto& s : d) s = sgn(rng) ? 1 : -1;

        RationalMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Rational acc;
                for (int t = 0; t < k; ++t) acc += Rational(d[t]) * v.at(i, t) * v.at(j, t);
                a.at(i, j) = acc;
                a.at(j, i) = acc;
            }
        if (rank(a) <= n - 2) return a;
    }
}

} // namespace graphspark
