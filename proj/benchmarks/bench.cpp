#include <benchmark/benchmark.h>

#include <random>

#include "graphspark/connectivity.hpp"
#include "graphspark/families.hpp"
#include "graphspark/forts.hpp"
#include "graphspark/linalg.hpp"
#include "graphspark/random_gen.hpp"
#include "graphspark/small_graphs.hpp"

using namespace graphspark;

namespace {

void BM_SparkSearchPath(benchmark::State& state) {
    Graph g = generate(FamilySpec::parse("path:" + std::to_string(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(spark(g).size);
}
BENCHMARK(BM_SparkSearchPath)->Arg(10)->Arg(14)->Arg(20);

void BM_SparkSearchRandom(benchmark::State& state) {
    std::mt19937_64 rng(1);
    Graph g = random_connected_graph(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spark(g).size);
}
BENCHMARK(BM_SparkSearchRandom)->Arg(12)->Arg(16);

void BM_SparkBrute(benchmark::State& state) {
    Graph g = generate(FamilySpec::parse("path:" + std::to_string(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(spark(g, SparkMethod::brute_force).size);
}
BENCHMARK(BM_SparkBrute)->Arg(10)->Arg(14);

void BM_FortSequenceSpider(benchmark::State& state) {
    Graph g = generate(
        FamilySpec::parse("spider:" + std::to_string(state.range(0)) + ",1,1"));
    for (auto _ : state) benchmark::DoNotOptimize(fort_sequence(g).total());
}
BENCHMARK(BM_FortSequenceSpider)->Arg(7)->Arg(10)->Arg(13);

void BM_ZeroForcingClosure(benchmark::State& state) {
    std::mt19937_64 rng(2);
    Graph g = random_connected_graph(rng, static_cast<int>(state.range(0)));
    VertexSet b{0, 1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(zf_closure(g, b).count());
}
BENCHMARK(BM_ZeroForcingClosure)->Arg(16)->Arg(48);

void BM_VertexConnectivity(benchmark::State& state) {
    Graph g = generate(
        FamilySpec::parse("cart:(cycle:4)x(path:" + std::to_string(state.range(0)) + ")"));
    for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(2)->Arg(5)->Arg(10);

void BM_MatrixSpark(benchmark::State& state) {
    std::mt19937_64 rng(3);
    RationalMatrix a = random_singular_symmetric(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(matrix_spark(a).spark);
}
BENCHMARK(BM_MatrixSpark)->Arg(6)->Arg(8);

void BM_ExactRank(benchmark::State& state) {
    std::mt19937_64 rng(4);
    RationalMatrix a = random_symmetric_matrix(rng, static_cast<int>(state.range(0)), 20);
    for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_ExactRank)->Arg(12)->Arg(24);

void BM_CanonicalCode(benchmark::State& state) {
    std::mt19937_64 rng(5);
    Graph g = random_graph(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode)->Arg(6)->Arg(8);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
