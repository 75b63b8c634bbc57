#include <benchmark/benchmark.h>

#include "msvc/config_solver.hpp"
#include "msvc/generators.hpp"
#include "msvc/kernelization.hpp"
#include "msvc/oracle.hpp"
#include "msvc/static_vc.hpp"

using namespace msvc;

namespace {

Instance sparse_instance(Vertex n, std::size_t tau, std::uint64_t k, std::uint64_t ell) {
    Instance inst;
    inst.graph = gen_random(1234, n, tau, 2.0 / n);
    inst.k = k;
    inst.ell = ell;
    return inst;
}

void BM_EnumerateCoversKK1(benchmark::State& state) {
    const Vertex n = static_cast<Vertex>(state.range(0));
    const StaticGraph layer = gen_random(99, n, 1, 2.0 / n).layers[0];
    for (auto _ : state) {
        auto covers = enumerate_covers_kk1(layer, 3);
        benchmark::DoNotOptimize(covers);
    }
    state.counters["n"] = n;
}
BENCHMARK(BM_EnumerateCoversKK1)->Arg(10)->Arg(14)->Arg(18)->Arg(22);

void BM_ConfigSolve(benchmark::State& state) {
    const Instance inst = sparse_instance(static_cast<Vertex>(state.range(0)), 8, 3, 2);
    for (auto _ : state) {
        auto seq = config::solve(inst);
        benchmark::DoNotOptimize(seq);
    }
}
BENCHMARK(BM_ConfigSolve)->Arg(10)->Arg(14)->Arg(18);

void BM_ConfigSolveMinimal(benchmark::State& state) {
    const Instance inst = sparse_instance(static_cast<Vertex>(state.range(0)), 8, 3, 2);
    for (auto _ : state) {
        auto seq = config::solve_minimal(inst);
        benchmark::DoNotOptimize(seq);
    }
}
BENCHMARK(BM_ConfigSolveMinimal)->Arg(10)->Arg(14)->Arg(18)->Arg(40);

void BM_Oracle(benchmark::State& state) {
    const Instance inst = sparse_instance(static_cast<Vertex>(state.range(0)), 4, 3, 2);
    for (auto _ : state) {
        auto seq = oracle_solve(inst, 100'000'000);
        benchmark::DoNotOptimize(seq);
    }
}
BENCHMARK(BM_Oracle)->Arg(8)->Arg(12)->Arg(16);

void BM_Kernelize(benchmark::State& state) {
    Instance inst;
    inst.graph = gen_random(77, static_cast<Vertex>(state.range(0)), 12, 0.3);
    inst.k = 3;
    inst.ell = 2;
    for (auto _ : state) {
        auto res = kernelize(inst);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_Kernelize)->Arg(50)->Arg(100)->Arg(200);

void BM_CliqueGadget(benchmark::State& state) {
    StaticGraph g{5, {}};
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) g.edges.push_back({u, v});
    for (auto _ : state) {
        auto built = gen_clique_to_msvc(g, static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(built);
    }
}
BENCHMARK(BM_CliqueGadget)->Arg(2)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
