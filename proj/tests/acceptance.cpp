// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL line. Run via `ctest -R acceptance` or ./msvc_acceptance.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <set>

#include "msvc/config_solver.hpp"
#include "msvc/generators.hpp"
#include "msvc/kernelization.hpp"
#include "msvc/oracle.hpp"
#include "msvc/presolve.hpp"
#include "msvc/static_vc.hpp"
#include "test_support.hpp"

using namespace msvc;
namespace ts = test_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool ok, const std::string& what, double secs) {
    std::printf("criterion %d: %s - %s (%.2fs)\n", criterion, ok ? "PASS" : "FAIL",
                what.c_str(), secs);
    std::fflush(stdout);
}

std::uint64_t sym_diff_size(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    return diff.size();
}

} // namespace

TEST_CASE("criterion 1: worked-example configuration graph and solution") {
    const auto start = Clock::now();
    bool ok = true;

    Instance inst = ts::example_instance();
    config::ConfigGraph cg = config::build_config_graph(inst);
    ok &= cg.partitions.size() == 3;
    ok &= cg.partitions[0].size() == 3 && cg.partitions[1].size() == 7 &&
          cg.partitions[2].size() == 2;

    auto sets_of = [&](std::size_t layer) {
        std::set<std::vector<Vertex>> out;
        for (std::size_t i = 0; i < cg.partitions[layer].size(); ++i)
            out.insert(cg.cover(layer, i));
        return out;
    };
    ok &= sets_of(0) == std::set<std::vector<Vertex>>{{1, 2}, {1, 3}, {2, 3}};
    ok &= sets_of(1) == std::set<std::vector<Vertex>>{{0},    {2},    {0, 1}, {0, 2},
                                                      {0, 3}, {1, 2}, {2, 3}};
    ok &= sets_of(2) == std::set<std::vector<Vertex>>{{0, 2}, {1, 3}};

    auto answer = config::solve(inst);
    ok &= answer.has_value();
    if (answer) ok &= verify_solution(inst, *answer).valid;
    ok &= verify_solution(inst, ts::example_solution()).valid;

    const double secs = seconds_since(start);
    ok &= secs < 1.0;
    report(1, ok, "worked example: partitions 3/7/2, YES, known solution verifies",
           secs);
    CHECK(ok);
}

TEST_CASE("criterion 2: solver/oracle equivalence on 10000 random instances") {
    const auto start = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(0xACCE2ULL);
    int yes = 0;
    for (int it = 0; it < 10'000 && ok; ++it) {
        Instance inst = ts::random_instance(rng);
        auto got = config::solve(inst);
        auto expect = oracle_solve(inst);
        ok &= got.has_value() == expect.has_value();
        if (got) {
            ++yes;
            ok &= verify_solution(inst, *got).valid;
        }
        if (expect) ok &= verify_solution(inst, *expect).valid;
    }
    const double secs = seconds_since(start);
    ok &= secs < 300.0;
    ok &= yes > 0;
    report(2, ok, "10000 instances, decisions agree, witnesses verify", secs);
    CHECK(ok);
}

TEST_CASE("criterion 3: kernel soundness and size bounds on 1000 instances") {
    const auto start = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(0xACCE3ULL);

    for (int it = 0; it < 700 && ok; ++it) {
        Instance inst = ts::random_instance(rng);
        KernelResult res = kernelize(inst);
        auto original = oracle_solve(inst);
        if (res.verdict == KernelVerdict::DecidedNo) {
            ok &= !original.has_value();
            continue;
        }
        ok &= res.verdict == KernelVerdict::Open;
        const std::uint64_t kk = inst.k * inst.k;
        ok &= res.reduced.graph.n <= 2 * kk * inst.graph.tau();
        ok &= res.reduced.graph.temporal_edge_count() <= kk * inst.graph.tau();
        auto reduced = oracle_solve(res.reduced);
        ok &= original.has_value() == reduced.has_value();
        if (reduced) {
            auto lifted = lift_solution(res, *reduced);
            ok &= verify_solution(inst, lifted).valid;
        }
    }

    for (int it = 0; it < 300 && ok; ++it) {
        Instance inst =
            ts::random_one_edge_instance(rng, static_cast<Vertex>(2 + rng() % 7));
        KernelResult res = kernelize_one_edge(inst);
        auto original = oracle_solve(inst);
        if (res.verdict == KernelVerdict::DecidedYes) {
            ok &= original.has_value();
            ok &= res.witness.has_value() && verify_solution(inst, *res.witness).valid;
            continue;
        }
        ok &= res.verdict == KernelVerdict::Open;
        const std::size_t tau = inst.graph.tau();
        ok &= res.reduced.graph.n <= 2 * tau;
        ok &= res.reduced.graph.temporal_edge_count() <= tau;
        // total size: n plus (t,u,v) per temporal edge
        ok &= res.reduced.graph.n + 3 * res.reduced.graph.temporal_edge_count() <= 5 * tau;
        auto reduced = oracle_solve(res.reduced);
        ok &= original.has_value() == reduced.has_value();
        if (reduced) ok &= verify_solution(inst, lift_solution(res, *reduced)).valid;
    }

    const double secs = seconds_since(start);
    ok &= secs < 120.0;
    report(3, ok, "1000 kernels answer-preserving within the size bounds", secs);
    CHECK(ok);
}

TEST_CASE("criterion 4: clique gadget on every graph with at most 5 vertices") {
    const auto start = Clock::now();
    bool ok = true;
    long graphs_checked = 0, solutions_checked = 0;

    for (Vertex n = 2; n <= 5 && ok; ++n) {
        const std::uint32_t masks = 1u << ts::potential_edges(n);
        for (std::uint32_t mask = 1; mask < masks && ok; ++mask) {
            const StaticGraph g = ts::graph_from_mask(n, mask);
            const std::uint64_t m = g.edges.size();
            for (std::uint64_t k : {2ull, 3ull}) {
                auto [inst, params] = gen_clique_to_msvc(g, k);
                const std::uint64_t K = k * (k - 1) / 2;
                ok &= params.K == K;
                ok &= params.k_prime == 2 * K + k + 1;
                ok &= params.kappa == K + k + 3;
                ok &= params.tau == 2 * m * params.kappa + 1;
                ok &= inst.graph.tau() == params.tau;
                for (const auto& layer : inst.graph.layers)
                    ok &= ts::is_forest(inst.graph.n, layer.edges);

                if (auto clique = ts::lex_first_clique(g, k)) {
                    auto seq = clique_forward_solution(g, k, *clique);
                    ok &= verify_solution(inst, seq).valid;
                    for (std::size_t i = 0; i + 1 < seq.sets.size() && ok; ++i)
                        ok &= sym_diff_size(seq.sets[i], seq.sets[i + 1]) == 2;
                    ++solutions_checked;
                }
                if (!ok) break;
            }
            ++graphs_checked;
        }
    }

    const double secs = seconds_since(start);
    ok &= secs < 60.0;
    ok &= graphs_checked == (1 + 7 + 63 + 1023) && solutions_checked > 1000;
    report(4, ok, "parameters, forest layers and forward solutions on all tiny graphs", secs);
    CHECK(ok);
}

TEST_CASE("criterion 5: reduction outputs decide like their inputs") {
    const auto start = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(0xACCE5ULL);

    // VC -> one-edge-layer MSVC, both the ell=0 and ell=1 constructions.
    for (Vertex n = 2; n <= 4 && ok; ++n) {
        const std::uint32_t masks = 1u << ts::potential_edges(n);
        for (std::uint32_t mask = 1; mask < masks && ok; ++mask) {
            const StaticGraph g = ts::graph_from_mask(n, mask);
            if (g.edges.size() > 4) continue;
            for (std::uint64_t k = 1; k <= 2 && ok; ++k) {
                const bool vc = ts::brute_vc(g, k);
                ok &= oracle_solve(gen_vc_to_msvc_ell0(g, k)).has_value() == vc;
                ok &= oracle_solve(gen_vc_to_msvc_ell1(g, k), 200'000'000).has_value() == vc;
            }
        }
    }

    // HCVC -> two layers (path, tree) on the cubic Hamiltonian 4-vertex graph.
    const StaticGraph k4 = ts::graph_from_mask(4, (1u << 6) - 1);
    const HamCycle cycle{{0, 1, 2, 3}};
    ok &= !oracle_solve(gen_hcvc_to_msvc(k4, 2, cycle)).has_value();
    ok &= oracle_solve(gen_hcvc_to_msvc(k4, 3, cycle)).has_value();

    // AND-composition over one-edge-layer instances (k >= 2, where the
    // transfer argument applies).
    for (int trial = 0; trial < 40 && ok; ++trial) {
        const std::size_t parts = 2 + rng() % 2;
        const Vertex shared_n = static_cast<Vertex>(4 + rng() % 2);
        std::vector<Instance> inputs;
        bool all_yes = true;
        for (std::size_t q = 0; q < parts; ++q) {
            Instance inst = ts::random_one_edge_instance(rng, shared_n, 3, 1, 0);
            inst.k = 2;
            inst.ell = 1;
            inputs.push_back(inst);
            all_yes &= oracle_solve(inst).has_value();
        }
        Instance composed = gen_and_composition(inputs);
        std::uint64_t want_tau = 2 * 2 * (parts - 1);
        for (const auto& inp : inputs) want_tau += inp.graph.tau();
        ok &= composed.graph.tau() == want_tau;
        ok &= oracle_solve(composed, 100'000'000).has_value() == all_yes;
    }

    // Layer stacking at ell = 2k.
    for (int trial = 0; trial < 40 && ok; ++trial) {
        const std::size_t parts = 1 + rng() % 3;
        std::vector<StaticGraph> graphs;
        const std::uint64_t k = 1 + rng() % 2;
        bool all_yes = true;
        for (std::size_t q = 0; q < parts; ++q) {
            StaticGraph g = ts::graph_from_mask(4, rng() % (1u << 6));
            all_yes &= ts::brute_vc(g, k);
            graphs.push_back(std::move(g));
        }
        ok &= oracle_solve(gen_stack_layers(graphs, k)).has_value() == all_yes;
    }

    const double secs = seconds_since(start);
    ok &= secs < 180.0;
    report(5, ok, "vc0/vc1/hcvc/andcomp/stack outputs match the composed decisions", secs);
    CHECK(ok);
}

TEST_CASE("criterion 6: XP smoke test at n=20, tau=10, k=3, ell=2") {
    const auto start = Clock::now();
    bool ok = true;

    Instance inst;
    inst.graph = gen_random(20260809, 20, 10, 0.005);
    inst.k = 3;
    inst.ell = 2;

    // Direct configuration-graph solve within the default node budget. At
    // this density every partition is populated, so the sweep really runs.
    auto cg = config::build_config_graph(inst);
    for (const auto& part : cg.partitions) ok &= !part.empty();
    auto direct = config::solve(inst);
    // Full pipeline agrees.
    PresolveOutcome pre = presolve(inst);
    std::optional<CoverSequence> pipeline;
    if (pre.kind == PresolveKind::DecidedYes) {
        pipeline = pre.witness;
    } else if (pre.kind == PresolveKind::ReducedToCore) {
        KernelResult kr = kernelize(inst);
        if (kr.verdict != KernelVerdict::DecidedNo)
            if (auto reduced = config::solve(kr.reduced)) pipeline = lift_solution(kr, *reduced);
    }
    ok &= direct.has_value() == pipeline.has_value();
    if (direct) ok &= verify_solution(inst, *direct).valid;

    const double secs = seconds_since(start);
    ok &= secs < 60.0;
    report(6, ok, std::string("n=20 tau=10 k=3 ell=2 solved (") +
                      (direct ? "YES" : "NO") + ") within budget", secs);
    CHECK(ok);
}

TEST_CASE("criterion 7: minimal mode against the brute-force minimal oracle") {
    const auto start = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(0xACCE7ULL);
    int yes = 0;

    for (int it = 0; it < 3000 && ok; ++it) {
        Instance inst = ts::random_instance(rng, {5, 3, 1, 3});
        auto got = config::solve_minimal(inst);
        ok &= got.has_value() == ts::brute_minimal_msvc(inst);
        if (got) {
            ++yes;
            ok &= verify_solution(inst, *got).valid;
        }
        for (const auto& layer : inst.graph.layers)
            ok &= enumerate_minimal_covers(layer, inst.k).size() <= (1ull << inst.k);
    }

    // Divergence witness: solvable, but not with minimal covers.
    Instance divergent{
        TemporalGraph{4, {StaticGraph{4, {{0, 1}}}, StaticGraph{4, {{2, 3}}}}}, 2, 1};
    ok &= config::solve(divergent).has_value();
    ok &= !config::solve_minimal(divergent).has_value();

    const double secs = seconds_since(start);
    ok &= secs < 120.0;
    ok &= yes > 0;
    report(7, ok, "solve_minimal matches the minimal-sequence oracle, <= 2^k nodes per layer",
           secs);
    CHECK(ok);
}
