// Acceptance suite: runs every published correctness criterion end to end
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria. Time limits are asserted where stated.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "graphspark/connectivity.hpp"
#include "graphspark/constructions.hpp"
#include "graphspark/families.hpp"
#include "graphspark/forts.hpp"
#include "graphspark/graph6.hpp"
#include "graphspark/linalg.hpp"
#include "graphspark/small_graphs.hpp"
#include "graphspark/verify.hpp"

using namespace graphspark;

namespace {

struct Criterion {
    int id;
    std::string label;
    std::function<bool(std::string&)> run;
    double time_limit_sec = 0; // 0: no limit asserted
};

bool expect(bool cond, const std::string& msg, std::string& detail) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

Graph example_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 4}});
}

RationalMatrix example_matrix() {
    return RationalMatrix::from_rows({{1, 1, 1, 0, 1},
                                      {1, 1, 1, 0, 1},
                                      {1, 1, 3, 1, 0},
                                      {0, 0, 1, 3, 1},
                                      {1, 1, 0, 1, 3}});
}

RationalMatrix k23_matrix() {
    return RationalMatrix::from_rows({{0, 0, 3, 1, 4},
                                      {0, 2, 4, 4, 4},
                                      {3, 4, -4, 0, 0},
                                      {1, 4, 0, 4, 0},
                                      {4, 4, 0, 0, 8}});
}

bool suite_pass(const char* id, std::string& detail, const CorpusSpec& spec = {}) {
    VerifyReport rep = run_verify(id, spec);
    std::ostringstream os;
    os << rep.cases << " cases";
    if (!rep.pass()) {
        os << "; first violation @" << rep.violations[0].index << ": "
           << rep.violations[0].detail;
        detail = os.str();
        return false;
    }
    detail = os.str();
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "worked example: null vector, matrix spark, pattern, graph spark",
                        [](std::string& d) {
                            RationalMatrix a = example_matrix();
                            RationalVector x{Rational(1), Rational(-1), Rational(0), Rational(0),
                                             Rational(0)};
                            bool ok = expect(is_zero_vector(a.multiply(x)), "A x != 0", d);
                            SparkCertificate c = matrix_spark(a);
                            ok &= expect(c.spark == 2, "matrix spark != 2", d);
                            ok &= expect(graph_of(a) == example_graph(), "pattern mismatch", d);
                            FortReport rep = spark(example_graph());
                            ok &= expect(rep.size == 2, "graph spark != 2", d);
                            ok &= expect(rep.minimum_fort == VertexSet{0, 1},
                                         "minimum fort is not {1,2}", d);
                            ok &= expect(rank(a) == 4, "rank != 4", d);
                            return ok;
                        },
                        1.0});

    criteria.push_back({2, "friendship graph F3 fort sequence (3,0,11,12,7,1)",
                        [](std::string& d) {
                            FortSequence seq =
                                fort_sequence(generate(FamilySpec::parse("friendship:3")));
                            return expect(seq.counts == std::vector<long long>{0, 0, 3, 0, 11, 12,
                                                                               7, 1},
                                          "sequence mismatch", d);
                        },
                        1.0});

    criteria.push_back({3, "spider sp(m,1,1) gap pattern for m=4..10",
                        [](std::string& d) {
                            for (int m = 4; m <= 10; ++m) {
                                Graph g = generate(
                                    FamilySpec::parse("spider:" + std::to_string(m) + ",1,1"));
                                FortSequence seq = fort_sequence(g);
                                const int n = m + 3;
                                const int lo = (m + 4) / 2; // ceil((m+3)/2)
                                if (seq.counts[2] != 1)
                                    return expect(false, "s2 != 1 at m=" + std::to_string(m), d);
                                for (int i = 3; i < lo; ++i)
                                    if (seq.counts[static_cast<std::size_t>(i)] != 0)
                                        return expect(false,
                                                      "expected gap at size " + std::to_string(i) +
                                                          ", m=" + std::to_string(m),
                                                      d);
                                for (int i = lo; i <= n; ++i)
                                    if (seq.counts[static_cast<std::size_t>(i)] <= 0)
                                        return expect(false,
                                                      "expected forts at size " +
                                                          std::to_string(i) +
                                                          ", m=" + std::to_string(m),
                                                      d);
                            }
                            return true;
                        },
                        10.0});

    criteria.push_back({4, "path spark ceil((n+1)/2), brute force to n=10 and search to n=14",
                        [](std::string& d) {
                            for (int n = 2; n <= 14; ++n) {
                                Graph g = generate(FamilySpec::parse("path:" + std::to_string(n)));
                                const int want = (n + 2) / 2;
                                if (spark(g, SparkMethod::branch_and_bound).size != want)
                                    return expect(false, "search wrong at n=" + std::to_string(n),
                                                  d);
                                if (n <= 10 && spark(g, SparkMethod::brute_force).size != want)
                                    return expect(false,
                                                  "brute force wrong at n=" + std::to_string(n), d);
                            }
                            return true;
                        }});

    criteria.push_back({5, "bipartite example: rank 3, principal minors, matrix spark 4",
                        [](std::string& d) {
                            RationalMatrix a = k23_matrix();
                            bool ok = expect(rank(a) == 3, "rank != 3", d);
                            FullSparkReport r = full_spark_check(a);
                            ok &= expect(r.principal_ok,
                                         "some 3x3 principal submatrix is singular", d);
                            bool has1 = false, has2 = false;
                            for (const auto& idx : r.singular_below_rank) {
                                if (idx.size() == 1) has1 = true;
                                if (idx.size() == 2) has2 = true;
                            }
                            ok &= expect(has1 && has2,
                                         "expected singular principal sizes 1 and 2", d);
                            ok &= expect(matrix_spark(a).spark == 4, "spark != 4", d);
                            return ok;
                        }});

    criteria.push_back({6, "fort-matrix duality: exhaustive constructions and random supports",
                        [](std::string& d) { return suite_pass("2.2", d); },
                        300.0});

    criteria.push_back({7, "full-spark equivalences on 500 random singular matrices",
                        [](std::string& d) { return suite_pass("3.1", d); }});

    criteria.push_back({8, "rank bump raises rank and preserves spark on 200 matrices",
                        [](std::string& d) { return suite_pass("3.3", d); }});

    criteria.push_back({9, "spark 2 iff duplicate vertices, all connected graphs to n=8",
                        [](std::string& d) { return suite_pass("5.1", d); }});

    criteria.push_back({10, "connectivity pins",
                        [](std::string& d) {
                            bool ok = expect(vertex_connectivity(generate(
                                                 FamilySpec::parse("kbip:2,3"))) == 2,
                                             "kappa(K_{2,3}) != 2", d);
                            ok &= expect(vertex_connectivity(
                                             generate(FamilySpec::parse("hypercube3"))) == 3,
                                         "kappa(Q3) != 3", d);
                            for (int t = 2; t <= 5; ++t)
                                ok &= expect(vertex_connectivity(generate(FamilySpec::parse(
                                                 "cart:(cycle:4)x(path:" + std::to_string(t) +
                                                 ")"))) == 3,
                                             "kappa(C4 x P" + std::to_string(t) + ") != 3", d);
                            for (int n = 2; n <= 8; ++n)
                                ok &= expect(vertex_connectivity(generate(FamilySpec::parse(
                                                 "complete:" + std::to_string(n)))) == n - 1,
                                             "kappa(K" + std::to_string(n) + ") != n-1", d);
                            return ok;
                        }});

    criteria.push_back({11, "full-spark matrices have (n-rank)-connected patterns",
                        [](std::string& d) { return suite_pass("4.3-forward", d); }});

    criteria.push_back({12, "trees: full spark iff full null support iff no Parter vertex",
                        [](std::string& d) { return suite_pass("6.4", d); }});

    criteria.push_back({13, "full-spark matrices certify generic nullity >= n-rank",
                        [](std::string& d) { return suite_pass("6.6", d); }});

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double sec =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit_sec > 0 && sec > c.time_limit_sec) {
            ok = false;
            detail = "time limit exceeded: " + std::to_string(sec) + " s > " +
                     std::to_string(c.time_limit_sec) + " s";
        }
        if (!ok) ++failures;
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.label;
        line << "  (" << sec << " s";
        if (!detail.empty()) line << "; " << detail;
        line << ")";
        std::cout << line.str() << std::endl;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << ": "
              << (criteria.size() - failures) << "/" << criteria.size() << " criteria"
              << std::endl;
    return failures;
}
