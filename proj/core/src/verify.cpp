#include "graphspark/verify.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "graphspark/combinations.hpp"
#include "graphspark/connectivity.hpp"
#include "graphspark/constructions.hpp"
#include "graphspark/forts.hpp"
#include "graphspark/graph6.hpp"
#include "graphspark/linalg.hpp"
#include "graphspark/matrix_io.hpp"
#include "graphspark/parallel.hpp"
#include "graphspark/random_gen.hpp"
#include "graphspark/small_graphs.hpp"

namespace graphspark {
namespace {

// Index-space tags keep the regenerated streams of 4.3-forward / 6.6
// identical to the streams their source suites draw.
constexpr std::uint64_t kTag22 = 0x22ULL << 56;
constexpr std::uint64_t kTag31 = 0x31ULL << 56;
constexpr std::uint64_t kTag33 = 0x33ULL << 56;
constexpr std::uint64_t kTag42 = 0x42ULL << 56;
constexpr std::uint64_t kTag61 = 0x61ULL << 56;
constexpr std::uint64_t kTag64 = 0x64ULL << 56;
constexpr std::uint64_t kTag66 = 0x66ULL << 56;

class Collector {
public:
    explicit Collector(int threads) : buckets_(static_cast<std::size_t>(threads < 1 ? 1 : threads)) {}

    void add(int worker, long index, std::string item, std::string detail) {
        buckets_[static_cast<std::size_t>(worker)].push_back(
            {index, std::move(item), std::move(detail)});
    }

    std::vector<Violation> merged() {
        std::vector<Violation> all;
        for (auto& b : buckets_)
            for (auto& v : b) all.push_back(std::move(v));
        std::sort(all.begin(), all.end(),
                  [](const Violation& a, const Violation& b) { return a.index < b.index; });
        return all;
    }

private:
    std::vector<std::vector<Violation>> buckets_;
};

std::string compact(const RationalMatrix& a) {
    std::string t = matrix_to_text(a);
    for (auto& c : t)
        if (c == '\n') c = ';';
    if (!t.empty() && t.back() == ';') t.pop_back();
    return t;
}

std::vector<Graph> load_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file '" + path + "'");
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

std::vector<RationalMatrix> load_matrix_blocks(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file '" + path + "'");
    std::vector<RationalMatrix> out;
    std::string line, block;
    auto flush = [&] {
        if (block.find_first_not_of(" \t\r\n") != std::string::npos)
            out.push_back(parse_matrix_text(block));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            flush();
        else
            block += line + "\n";
    }
    flush();
    return out;
}

// Exhaustive corpus as flat (graph, order) list, levels 1..max_n.
std::vector<const Graph*> flatten_corpus(int max_n) {
    const auto& corpus = connected_graph_corpus(max_n);
    std::vector<const Graph*> flat;
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : corpus[static_cast<std::size_t>(n)]) flat.push_back(&g);
    return flat;
}

struct GraphCorpus {
    std::vector<Graph> owned;        // file / random corpora
    std::vector<const Graph*> items; // view used by the suites
    std::string description;
};

GraphCorpus resolve_graphs(const CorpusSpec& spec, int default_exhaustive_n) {
    GraphCorpus c;
    switch (spec.kind) {
        case CorpusSpec::Kind::file: {
            c.owned = load_graph6_file(spec.path);
            for (const Graph& g : c.owned) c.items.push_back(&g);
            c.description = "file " + spec.path + " (" + std::to_string(c.items.size()) + " graphs)";
            return c;
        }
        case CorpusSpec::Kind::random: {
            long count = spec.count > 0 ? spec.count : 200;
            int max_n = spec.max_n > 1 ? spec.max_n : 8;
            for (long i = 0; i < count; ++i) {
                std::mt19937_64 rng(mix_seed(spec.seed, static_cast<std::uint64_t>(i)));
                std::uniform_int_distribution<int> ord(2, max_n);
                c.owned.push_back(random_connected_graph(rng, ord(rng)));
            }
            for (const Graph& g : c.owned) c.items.push_back(&g);
            c.description = "random connected graphs: count=" + std::to_string(count) +
                            ", n<=" + std::to_string(max_n) + ", seed=" + std::to_string(spec.seed);
            return c;
        }
        case CorpusSpec::Kind::exhaustive:
        case CorpusSpec::Kind::defaulted: {
            int max_n = spec.kind == CorpusSpec::Kind::exhaustive && spec.max_n > 0
                            ? spec.max_n
                            : default_exhaustive_n;
            c.items = flatten_corpus(max_n);
            c.description = "exhaustive connected graphs up to isomorphism, n<=" +
                            std::to_string(max_n) + " (" + std::to_string(c.items.size()) + " graphs)";
            return c;
        }
    }
    throw DomainError("unhandled corpus kind");
}

long resolve_count(const CorpusSpec& spec, long dflt) {
    return spec.count > 0 ? spec.count : dflt;
}
int resolve_max_n(const CorpusSpec& spec, int dflt, int floor = 2) {
    int n = spec.max_n > 0 ? spec.max_n : dflt;
    return n < floor ? floor : n;
}

// ---- shared matrix streams ------------------------------------------------

RationalMatrix gen_matrix_22(std::uint64_t seed, long i, int max_n, Graph* pattern_out) {
    std::mt19937_64 rng(mix_seed(seed ^ kTag22, static_cast<std::uint64_t>(i)));
    std::uniform_int_distribution<int> ord(2, max_n);
    Graph g = random_graph(rng, ord(rng)); // pattern need not be connected
    RationalMatrix a = random_singular_in_pattern(rng, g);
    if (pattern_out) *pattern_out = g;
    return a;
}

RationalMatrix gen_matrix_31(std::uint64_t seed, long i, int max_n) {
    std::mt19937_64 rng(mix_seed(seed ^ kTag31, static_cast<std::uint64_t>(i)));
    std::uniform_int_distribution<int> ord(2, max_n);
    return random_singular_symmetric(rng, ord(rng));
}

RationalMatrix gen_matrix_33(std::uint64_t seed, long i, int max_n) {
    std::mt19937_64 rng(mix_seed(seed ^ kTag33, static_cast<std::uint64_t>(i)));
    std::uniform_int_distribution<int> ord(3, max_n);
    return random_corank2_symmetric(rng, ord(rng));
}

// ---- suites ----------------------------------------------------------------

void suite_2_2(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    GraphCorpus corpus = resolve_graphs(spec, 7);
    const long rand_count = resolve_count(spec, 1000);
    const int rand_max_n = resolve_max_n(spec, 7);
    rep.corpus = corpus.description + " x all forts; plus " + std::to_string(rand_count) +
                 " random singular matrices over random patterns n<=" +
                 std::to_string(rand_max_n) + ", seed=" + std::to_string(spec.seed);

    Collector col(threads);
    std::atomic<long> cases{0};

    parallel_for(static_cast<long>(corpus.items.size()), threads, [&](long i, int w) {
        const Graph& g = *corpus.items[static_cast<std::size_t>(i)];
        std::mt19937_64 rng(mix_seed(spec.seed ^ kTag22, 0x10000000ULL + static_cast<std::uint64_t>(i)));
        std::uniform_int_distribution<int> val(-5, 5);
        try {
            enumerate_forts(g, [&](const VertexSet& f) {
                cases.fetch_add(1, std::memory_order_relaxed);
                // all-ones values, then a random nonzero assignment
                matrix_from_fort(g, {f, {}});
                RationalVector values;
                for (int k = 0; k < f.count(); ++k) {
                    int v = val(rng);
                    values.push_back(Rational(v == 0 ? 1 : v));
                }
                matrix_from_fort(g, {f, values});
            });
        } catch (const std::exception& e) {
            col.add(w, i, encode_graph6(g), std::string("construction failed: ") + e.what());
        }
    });

    parallel_for(rand_count, threads, [&](long i, int w) {
        Graph pattern(1);
        RationalMatrix a = gen_matrix_22(spec.seed, i, rand_max_n, &pattern);
        cases.fetch_add(1, std::memory_order_relaxed);
        NullBasis nb = null_basis(a);
        std::mt19937_64 rng(mix_seed(spec.seed ^ kTag22, 0x20000000ULL + static_cast<std::uint64_t>(i)));
        std::uniform_int_distribution<int> coef(-3, 3);
        auto check_vec = [&](const RationalVector& x) {
            if (is_zero_vector(x)) return;
            VertexSet s = support(x);
            if (!is_fort(pattern, s))
                col.add(w, static_cast<long>(corpus.items.size()) + i, compact(a),
                        "null vector support {" + vector_to_text(x) + "} is not a fort of " +
                            encode_graph6(pattern));
        };
        for (const auto& x : nb.vectors) check_vec(x);
        for (int t = 0; t < 2; ++t) {
            RationalVector combo(static_cast<std::size_t>(a.cols()));
            for (const auto& x : nb.vectors) {
                Rational c(coef(rng));
                for (std::size_t k = 0; k < combo.size(); ++k) combo[k] += c * x[k];
            }
            check_vec(combo);
        }
    });

    rep.cases = cases.load();
    rep.violations = col.merged();
}

void suite_2_3(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    GraphCorpus corpus = resolve_graphs(spec, 8);
    rep.corpus = corpus.description + "; K1 skipped (minimum degree 0 is degenerate)";
    Collector col(threads);
    std::atomic<long> cases{0};

    parallel_for(static_cast<long>(corpus.items.size()), threads, [&](long i, int w) {
        const Graph& g = *corpus.items[static_cast<std::size_t>(i)];
        const int n = g.order();
        if (n < 2) return;
        cases.fetch_add(1, std::memory_order_relaxed);
        const int delta = g.min_degree();
        for (int m = 1; m <= n; ++m) {
            const int k = n - m + 1;
            bool counterexample = for_each_combination(n, k, [&](const std::vector<int>& idx) {
                VertexSet f;
                for (int v : idx) f.set(v);
                return !is_fort(g, f);
            });
            const bool all_forts = !counterexample;
            if (all_forts != (m <= delta)) {
                col.add(w, i, encode_graph6(g),
                        "m=" + std::to_string(m) + ": all (n-m+1)-subsets fort=" +
                            (all_forts ? "true" : "false") + " but m<=delta=" +
                            (m <= delta ? "true" : "false"));
                return;
            }
        }
    });
    rep.cases = cases.load();
    rep.violations = col.merged();
}

void suite_2_4(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    GraphCorpus corpus = resolve_graphs(spec, 8);
    rep.corpus = corpus.description;
    Collector col(threads);
    std::atomic<long> cases{0};

    parallel_for(static_cast<long>(corpus.items.size()), threads, [&](long i, int w) {
        const Graph& g = *corpus.items[static_cast<std::size_t>(i)];
        const int n = g.order();
        cases.fetch_add(1, std::memory_order_relaxed);
        auto all_forts = [&](int k) {
            return !for_each_combination(n, k, [&](const std::vector<int>& idx) {
                VertexSet f;
                for (int v : idx) f.set(v);
                return !is_fort(g, f);
            });
        };
        for (int k = 1; k < n; ++k) {
            if (all_forts(k) && !all_forts(k + 1)) {
                col.add(w, i, encode_graph6(g),
                        "every " + std::to_string(k) + "-subset is a fort but some " +
                            std::to_string(k + 1) + "-subset is not");
                return;
            }
        }
    });
    rep.cases = cases.load();
    rep.violations = col.merged();
}

void suite_2_6(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    GraphCorpus corpus = resolve_graphs(spec, 8);
    rep.corpus = corpus.description +
                 "; checks failed(G)=n-spark(G) against brute-force maximization, "
                 "closure complements are forts, fort complements fail to force";
    Collector col(threads);
    std::atomic<long> cases{0};

    parallel_for(static_cast<long>(corpus.items.size()), threads, [&](long i, int w) {
        const Graph& g = *corpus.items[static_cast<std::size_t>(i)];
        const int n = g.order();
        cases.fetch_add(1, std::memory_order_relaxed);
        const int s = spark(g).size;

        int best_failed = -1;
        const std::uint64_t end = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < end; ++mask) {
            VertexSet b;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) b.set(v);
            VertexSet closure = zf_closure(g, b);
            if (closure != g.vertices()) {
                int sz = b.count();
                if (sz > best_failed) best_failed = sz;
            }
            VertexSet white = g.vertices() - closure;
            if (!white.empty() && !is_fort(g, white)) {
                col.add(w, i, encode_graph6(g),
                        "closure complement is not a fort (mask " + std::to_string(mask) + ")");
                return;
            }
        }
        if (best_failed != n - s) {
            col.add(w, i, encode_graph6(g),
                    "failed oracle " + std::to_string(best_failed) + " != n - spark = " +
                        std::to_string(n - s));
            return;
        }
        bool complement_ok = true;
        enumerate_forts(g, [&](const VertexSet& f) {
            if (complement_ok && is_zero_forcing_set(g, g.vertices() - f)) complement_ok = false;
        });
        if (!complement_ok)
            col.add(w, i, encode_graph6(g), "some fort complement is a zero forcing set");
    });
    rep.cases = cases.load();
    rep.violations = col.merged();
}

void suite_3_1(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    const long count = resolve_count(spec, 500);
    const int max_n = resolve_max_n(spec, 7);
    rep.corpus = "random singular symmetric rational matrices: count=" + std::to_string(count) +
                 ", n<=" + std::to_string(max_n) + ", seed=" + std::to_string(spec.seed);
    Collector col(threads);

    parallel_for(count, threads, [&](long i, int w) {
        RationalMatrix a = gen_matrix_31(spec.seed, i, max_n);
        FullSparkReport r = full_spark_check(a);
        if (!r.conditions_agree)
            col.add(w, i, compact(a),
                    "conditions disagree: principal=" + std::to_string(r.principal_ok) +
                        " null-minors=" + std::to_string(r.null_minors_ok) +
                        " spark=" + std::to_string(r.spark_ok));
    });
    rep.cases = count;
    rep.violations = col.merged();
}

void suite_3_2(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    const long count = resolve_count(spec, 500);
    const int max_n = resolve_max_n(spec, 6, 1);
    rep.corpus = "random symmetric matrices with random border vectors: count=" +
                 std::to_string(count) + ", n<=" + std::to_string(max_n) +
                 ", seed=" + std::to_string(spec.seed);
    Collector col(threads);

    parallel_for(count, threads, [&](long i, int w) {
        std::mt19937_64 rng(mix_seed(spec.seed, static_cast<std::uint64_t>(i)));
        std::uniform_int_distribution<int> ord(1, max_n);
        std::uniform_int_distribution<int> val(-3, 3);
        const int n = ord(rng);
        RationalMatrix a = random_symmetric_matrix(rng, n);
        RationalVector x(static_cast<std::size_t>(n));
        for (auto& v : x) v = Rational(val(rng));

        RationalMatrix b = border(a, x);
        if (rank(b) != rank(a)) {
            col.add(w, i, compact(a), "border changed the rank");
            return;
        }
        RationalVector null_vec(static_cast<std::size_t>(n + 1));
        null_vec[0] = Rational(-1);
        for (int k = 0; k < n; ++k) null_vec[static_cast<std::size_t>(k + 1)] = x[k];
        if (!is_zero_vector(b.multiply(null_vec))) {
            col.add(w, i, compact(a), "(-1, x) is not a null vector of the bordered matrix");
            return;
        }
        if (rank(a) == n) {
            int expect = support(x).count() + 1;
            int got = matrix_spark(b).spark;
            if (got != expect)
                col.add(w, i, compact(a),
                        "nonsingular core: spark(B)=" + std::to_string(got) + " expected " +
                            std::to_string(expect));
        }
    });
    rep.cases = count;
    rep.violations = col.merged();
}

void suite_3_3(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    const long count = resolve_count(spec, 200);
    const int max_n = resolve_max_n(spec, 7, 3);
    rep.corpus = "random symmetric matrices with nullity >= 2: count=" + std::to_string(count) +
                 ", n<=" + std::to_string(max_n) + ", seed=" + std::to_string(spec.seed) +
                 "; bumps iterated to nullity 1";
    Collector col(threads);

    parallel_for(count, threads, [&](long i, int w) {
        RationalMatrix a = gen_matrix_33(spec.seed, i, max_n);
        const int n = a.rows();
        const int s = matrix_spark(a).spark;
        try {
            RationalMatrix cur = a;
            while (rank(cur) < n - 1) {
                RationalMatrix next = rank_bump(cur);
                if (rank(next) != rank(cur) + 1)
                    throw std::runtime_error("rank did not increase by one");
                if (matrix_spark(next).spark != s) throw std::runtime_error("spark changed");
                if (graph_of(next) != graph_of(cur))
                    throw std::runtime_error("pattern changed");
                cur = next;
            }
        } catch (const std::exception& e) {
            col.add(w, i, compact(a), e.what());
        }
    });
    rep.cases = count;
    rep.violations = col.merged();
}

void suite_4_2(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    std::vector<RationalMatrix> owned;
    long count;
    if (spec.kind == CorpusSpec::Kind::file) {
        owned = load_matrix_blocks(spec.path);
        count = static_cast<long>(owned.size());
        rep.corpus = "supplied PSD instances from " + spec.path + " (" + std::to_string(count) +
                     " matrices; PSD verified by exact LDL^T)";
    } else {
        count = resolve_count(spec, 300);
        rep.corpus = "random Gram matrices B^T B: count=" + std::to_string(count) +
                     ", n<=" + std::to_string(resolve_max_n(spec, 7)) +
                     ", seed=" + std::to_string(spec.seed);
    }
    const int max_n = resolve_max_n(spec, 7);
    Collector col(threads);
    std::atomic<long> premise_hit{0};

    parallel_for(count, threads, [&](long i, int w) {
        RationalMatrix a = [&] {
            if (!owned.empty()) return owned[static_cast<std::size_t>(i)];
            std::mt19937_64 rng(mix_seed(spec.seed ^ kTag42, static_cast<std::uint64_t>(i)));
            std::uniform_int_distribution<int> ord(2, max_n);
            return random_gram(rng, ord(rng));
        }();
        if (!a.is_symmetric() || !is_positive_semidefinite(a)) {
            col.add(w, i, compact(a), "instance is not positive semidefinite (exact LDL^T)");
            return;
        }
        const int n = a.rows();
        Graph g = graph_of(a);
        const int kappa = vertex_connectivity(g);
        if (rank(a) < n - kappa) {
            premise_hit.fetch_add(1, std::memory_order_relaxed);
            const int s = matrix_spark(a).spark;
            const int bound = n - g.min_degree() - 1;
            if (s > bound)
                col.add(w, i, compact(a),
                        "rank<" + std::to_string(n - kappa) + " but spark " + std::to_string(s) +
                            " > n-delta-1 = " + std::to_string(bound));
        }
    });
    rep.cases = count;
    rep.corpus += "; premise (rank < n-kappa) held in " + std::to_string(premise_hit.load()) +
                  " cases";
    rep.violations = col.merged();
}

void suite_4_3(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    const long c22 = resolve_count(spec, 1000);
    const long c31 = resolve_count(spec, 500);
    const long c33 = resolve_count(spec, 200);
    rep.corpus = "full-spark matrices with connected patterns from the streams of suites 2.2 (" +
                 std::to_string(c22) + "), 3.1 (" + std::to_string(c31) + "), 3.3 (" +
                 std::to_string(c33) + "), seed=" + std::to_string(spec.seed);
    Collector col(threads);
    std::atomic<long> cases{0};

    auto check = [&](long index, int w, const RationalMatrix& a) {
        FullSparkReport r = full_spark_check(a);
        if (!r.full_spark) return;
        Graph g = graph_of(a);
        if (!g.is_connected()) return; // the paper's standing assumption
        cases.fetch_add(1, std::memory_order_relaxed);
        const int need = a.rows() - r.rank;
        if (vertex_connectivity(g) < need)
            col.add(w, index, compact(a),
                    "full spark, rank " + std::to_string(r.rank) + ", but kappa(" +
                        encode_graph6(g) + ") = " + std::to_string(vertex_connectivity(g)) +
                        " < " + std::to_string(need));
    };

    parallel_for(c22, threads, [&](long i, int w) { check(i, w, gen_matrix_22(spec.seed, i, 7, nullptr)); });
    parallel_for(c31, threads, [&](long i, int w) { check(c22 + i, w, gen_matrix_31(spec.seed, i, 7)); });
    parallel_for(c33, threads, [&](long i, int w) { check(c22 + c31 + i, w, gen_matrix_33(spec.seed, i, 7)); });

    rep.cases = cases.load();
    rep.violations = col.merged();
}

void suite_5_1(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    GraphCorpus corpus = resolve_graphs(spec, 8);
    rep.corpus = corpus.description;
    Collector col(threads);

    // Corpus self-test: the class counts per order must match the known
    // values when running on the internally generated corpus.
    if (spec.kind == CorpusSpec::Kind::defaulted || spec.kind == CorpusSpec::Kind::exhaustive) {
        int max_n = spec.kind == CorpusSpec::Kind::exhaustive && spec.max_n > 0 ? spec.max_n : 8;
        const auto& levels = connected_graph_corpus(max_n);
        for (int n = 1; n <= max_n; ++n) {
            long long got = static_cast<long long>(levels[static_cast<std::size_t>(n)].size());
            if (got != kConnectedGraphCounts[n - 1])
                col.add(0, -1, "corpus n=" + std::to_string(n),
                        "connected graph count " + std::to_string(got) + " != expected " +
                            std::to_string(kConnectedGraphCounts[n - 1]));
        }
    }

    parallel_for(static_cast<long>(corpus.items.size()), threads, [&](long i, int w) {
        const Graph& g = *corpus.items[static_cast<std::size_t>(i)];
        const bool spark2 = spark(g).size == 2;
        const bool dup = duplicate_vertices(g).has_value();
        if (spark2 != dup)
            col.add(w, i, encode_graph6(g),
                    std::string("spark=2 is ") + (spark2 ? "true" : "false") +
                        " but duplicate pair exists is " + (dup ? "true" : "false"));
    });
    rep.cases = static_cast<long>(corpus.items.size());
    rep.violations = col.merged();
}

void suite_6_1(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    const long count = resolve_count(spec, 300);
    const int max_n = resolve_max_n(spec, 7);
    rep.corpus = "random symmetric matrices (half singularized): count=" + std::to_string(count) +
                 ", n<=" + std::to_string(max_n) + ", seed=" + std::to_string(spec.seed);
    Collector col(threads);

    parallel_for(count, threads, [&](long i, int w) {
        std::mt19937_64 rng(mix_seed(spec.seed ^ kTag61, static_cast<std::uint64_t>(i)));
        std::uniform_int_distribution<int> ord(2, max_n);
        RationalMatrix a = random_symmetric_matrix(rng, ord(rng));
        if (i % 2 == 0) make_singular_by_diagonal(a);
        VertexSet ns = null_support(a);
        for (int v = 0; v < a.rows(); ++v) {
            const bool fiedler = parter_fiedler(a, v).is_fiedler();
            const bool zero_everywhere = !ns.test(v);
            if (fiedler != zero_everywhere) {
                col.add(w, i, compact(a),
                        "vertex " + std::to_string(v) + ": fiedler=" +
                            (fiedler ? "true" : "false") + " but v outside supp N(A)=" +
                            (zero_everywhere ? "true" : "false"));
                return;
            }
        }
    });
    rep.cases = count;
    rep.violations = col.merged();
}

void suite_6_4(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    const long count = resolve_count(spec, 300);
    const int max_n = resolve_max_n(spec, 9);
    rep.corpus = "random singular matrices over random trees: count=" + std::to_string(count) +
                 ", n<=" + std::to_string(max_n) + ", seed=" + std::to_string(spec.seed);
    Collector col(threads);

    parallel_for(count, threads, [&](long i, int w) {
        std::mt19937_64 rng(mix_seed(spec.seed ^ kTag64, static_cast<std::uint64_t>(i)));
        std::uniform_int_distribution<int> ord(2, max_n);
        Graph t = random_tree(rng, ord(rng));
        RationalMatrix a = random_singular_in_pattern(rng, t);

        const bool full = full_spark_check(a).full_spark;
        const bool full_support = null_support(a) == t.vertices();
        bool no_parter = true;
        for (int v = 0; v < t.order() && no_parter; ++v)
            if (parter_fiedler(a, v).cls == VertexClass::parter) no_parter = false;

        if (full != full_support || full_support != no_parter)
            col.add(w, i, compact(a),
                    std::string("tree ") + encode_graph6(t) + ": full-spark=" +
                        (full ? "T" : "F") + " full-null-support=" + (full_support ? "T" : "F") +
                        " no-parter=" + (no_parter ? "T" : "F"));
    });
    rep.cases = count;
    rep.violations = col.merged();
}

void suite_6_6(const CorpusSpec& spec, int threads, VerifyReport& rep) {
    const long count = resolve_count(spec, 500);
    const int max_n = resolve_max_n(spec, 7);
    rep.corpus = "full-spark singular matrices from the suite 3.1 stream: count=" +
                 std::to_string(count) + ", n<=" + std::to_string(max_n) +
                 ", seed=" + std::to_string(spec.seed);
    Collector col(threads);
    std::atomic<long> cases{0};

    parallel_for(count, threads, [&](long i, int w) {
        RationalMatrix a = gen_matrix_31(spec.seed, i, max_n);
        FullSparkReport r = full_spark_check(a);
        if (!r.full_spark || r.nonsingular) return;
        cases.fetch_add(1, std::memory_order_relaxed);
        const int n = a.rows();
        const int want = n - r.rank;

        GenericNullityOptions opts;
        opts.seed = mix_seed(spec.seed ^ kTag66, static_cast<std::uint64_t>(i));
        GenericNullityReport gn = generic_nullity(a, opts);
        if (gn.certified < want) {
            col.add(w, i, compact(a),
                    "generic nullity certified " + std::to_string(gn.certified) + " < n-rank = " +
                        std::to_string(want));
            return;
        }
        if (!gn.certificate || !is_generic(*gn.certificate)) {
            col.add(w, i, compact(a), "generic-nullity certificate failed re-verification");
            return;
        }
        if (nullity(a) == 1) {
            // One-dimensional null space: the basis itself must be generic
            // (its single vector has full support for a full-spark matrix).
            NullBasis nb = null_basis(a);
            RationalMatrix x(n, 1);
            for (int k = 0; k < n; ++k) x.at(k, 0) = nb.vectors[0][k];
            if (!is_generic(x)) {
                col.add(w, i, compact(a), "null basis of a nullity-1 full-spark matrix not generic");
                return;
            }
        }
    });
    rep.cases = cases.load();
    rep.violations = col.merged();
}

struct SuiteDef {
    const char* id;
    const char* description;
    void (*run)(const CorpusSpec&, int, VerifyReport&);
};

const SuiteDef kSuiteTable[] = {
    {"2.2", "support of a null vector is a fort; every fort carries a matrix with the prescribed null vector", suite_2_2},
    {"2.3", "every (n-m+1)-subset is a fort iff m <= minimum degree", suite_2_3},
    {"2.4", "if every k-subset is a fort then every (k+1)-subset is a fort", suite_2_4},
    {"2.6", "failed(G) = n - spark(G); closure complements are forts; fort complements do not force", suite_2_6},
    {"3.1", "full-spark equivalences: principal minors / null-basis minors / subset spark agree", suite_3_1},
    {"3.2", "bordered matrix preserves rank and carries the (-1, x) null vector", suite_3_2},
    {"3.3", "rank bump raises rank by one and preserves spark and pattern", suite_3_3},
    {"4.2-on-instances", "PSD instances: rank < n-kappa forces spark <= n-delta-1", suite_4_2},
    {"4.3-forward", "every full-spark matrix has an (n-rank)-connected pattern graph", suite_4_3},
    {"5.1", "spark(G) = 2 iff duplicate vertices exist; corpus counts self-checked", suite_5_1},
    {"6.1", "v is a Fiedler vertex iff every null vector vanishes at v", suite_6_1},
    {"6.4", "trees: full spark iff full null support iff no Parter vertex", suite_6_4},
    {"6.6", "full-spark matrices certify generic nullity >= n-rank", suite_6_6},
};

} // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuiteTable) v.push_back(s.id);
        return v;
    }();
    return ids;
}

std::string verify_suite_description(const std::string& suite) {
    for (const auto& s : kSuiteTable)
        if (suite == s.id) return s.description;
    throw DomainError("unknown verify suite '" + suite + "'");
}

VerifyReport run_verify(const std::string& suite, const CorpusSpec& corpus, int threads) {
    const SuiteDef* def = nullptr;
    for (const auto& s : kSuiteTable)
        if (suite == s.id) def = &s;
    if (!def) throw DomainError("unknown verify suite '" + suite + "'");

    if (threads <= 0) threads = default_thread_count();
    VerifyReport rep;
    rep.suite = suite;
    rep.seed = corpus.seed;

    auto start = std::chrono::steady_clock::now();
    def->run(corpus, threads, rep);
    rep.elapsed_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string VerifyReport::text() const {
    std::ostringstream out;
    out << "suite " << suite << ": " << (pass() ? "PASS" : "FAIL") << " (" << cases
        << " cases, " << violations.size() << " violations, " << elapsed_sec << " s, seed "
        << seed << ")\n";
    out << "  corpus: " << corpus << "\n";
    for (const auto& v : violations)
        out << "  violation @" << v.index << " [" << v.item << "] " << v.detail << "\n";
    return out.str();
}

std::string VerifyReport::json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["corpus"] = corpus;
    j["cases"] = cases;
    j["pass"] = pass();
    j["elapsed_sec"] = elapsed_sec;
    j["seed"] = seed;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations)
        j["violations"].push_back({{"index", v.index}, {"item", v.item}, {"detail", v.detail}});
    return j.dump();
}

} // namespace graphspark
