#include <doctest.h>

#include "msvc/oracle.hpp"
#include "msvc/presolve.hpp"
#include "test_support.hpp"

using namespace msvc;
namespace ts = test_support;

TEST_CASE("trivial_by_edge_count") {
    Instance inst = ts::example_instance(); // 8 temporal edges

    SUBCASE("fires at k = 8") {
        Instance big = inst;
        big.k = 8;
        auto seq = trivial_by_edge_count(big);
        REQUIRE(seq.has_value());
        CHECK(verify_solution(big, *seq).valid);
        for (std::size_t i = 0; i + 1 < seq->sets.size(); ++i)
            CHECK(seq->sets[i] == seq->sets[i + 1]);
    }
    SUBCASE("does not fire at k = 2") {
        CHECK_FALSE(trivial_by_edge_count(inst).has_value());
    }
    SUBCASE("all-empty layers, k = 0") {
        Instance empty{TemporalGraph{2, {StaticGraph{2, {}}, StaticGraph{2, {}}}}, 0, 0};
        auto seq = trivial_by_edge_count(empty);
        REQUIRE(seq.has_value());
        CHECK(seq->sets == std::vector<std::vector<Vertex>>{{}, {}});
    }
}

TEST_CASE("solve_ell_zero") {
    Instance inst = ts::example_instance();
    inst.ell = 0;

    SUBCASE("k = 3 is a yes (min cover of K4 is 3)") {
        Instance k3 = inst;
        k3.k = 3;
        auto seq = solve_ell_zero(k3);
        REQUIRE(seq.has_value());
        CHECK(verify_solution(k3, *seq).valid);
    }
    SUBCASE("k = 2 is a no") {
        CHECK(ts::brute_min_vc(underlying_graph(inst.graph)) == 3);
        CHECK_FALSE(solve_ell_zero(inst).has_value());
    }
    SUBCASE("single empty layer, k = 0") {
        Instance empty{TemporalGraph{1, {StaticGraph{1, {}}}}, 0, 0};
        auto seq = solve_ell_zero(empty);
        REQUIRE(seq.has_value());
        CHECK(seq->sets == std::vector<std::vector<Vertex>>{{}});
    }
    SUBCASE("contract violation on ell != 0") {
        Instance bad = ts::example_instance();
        CHECK_THROWS_AS(solve_ell_zero(bad), ContractError);
    }
}

TEST_CASE("solve_ell_ge_2k") {
    SUBCASE("worked example with ell = 4, k = 2") {
        Instance inst = ts::example_instance();
        inst.ell = 4;
        auto seq = solve_ell_ge_2k(inst);
        REQUIRE(seq.has_value());
        CHECK(verify_solution(inst, *seq).valid);
    }
    SUBCASE("a K5 layer makes it a no at k = 2") {
        StaticGraph k5{5, {}};
        for (Vertex u = 0; u < 5; ++u)
            for (Vertex v = u + 1; v < 5; ++v) k5.edges.push_back({u, v});
        Instance inst{TemporalGraph{5, {StaticGraph{5, {{0, 1}}}, k5}}, 2, 4};
        CHECK_FALSE(solve_ell_ge_2k(inst).has_value());
    }
    SUBCASE("single layer behaves like plain vertex cover") {
        Instance inst{TemporalGraph{3, {StaticGraph{3, {{0, 1}, {1, 2}}}}}, 1, 2};
        auto seq = solve_ell_ge_2k(inst);
        REQUIRE(seq.has_value());
        CHECK(seq->sets[0] == std::vector<Vertex>{1});
    }
    SUBCASE("contract violation on ell < 2k") {
        Instance bad = ts::example_instance();
        CHECK_THROWS_AS(solve_ell_ge_2k(bad), ContractError);
    }
}

TEST_CASE("presolve dispatch") {
    SUBCASE("k = 0 with a nonempty layer is a no") {
        Instance inst{TemporalGraph{2, {StaticGraph{2, {{0, 1}}}}}, 0, 0};
        auto out = presolve(inst);
        CHECK(out.kind == PresolveKind::DecidedNo);
    }
    SUBCASE("k = n decides yes with the full vertex set") {
        Instance inst = ts::example_instance();
        inst.k = 4;
        inst.ell = 0;
        auto out = presolve(inst);
        REQUIRE(out.kind == PresolveKind::DecidedYes);
        CHECK(out.witness.sets[0] == std::vector<Vertex>{0, 1, 2, 3});
        CHECK(verify_solution(inst, out.witness).valid);
    }
    SUBCASE("the worked example reaches the core solver") {
        auto out = presolve(ts::example_instance());
        CHECK(out.kind == PresolveKind::ReducedToCore);
        CHECK(out.core.graph.temporal_edge_count() == 8);
    }
}

TEST_CASE("fast paths fire only inside their guards and match the oracle") {
    std::mt19937_64 rng(43);
    int decided = 0;
    for (int it = 0; it < 600; ++it) {
        Instance inst = ts::random_instance(rng);
        if (rng() % 8 == 0) inst.k = 0; // exercise the boundary dispatch too
        if (rng() % 8 == 0) inst.k = inst.graph.n + rng() % 3;
        auto out = presolve(inst);
        const bool guard_applies = inst.k == 0 || inst.k >= inst.graph.n ||
                                   inst.k >= inst.graph.temporal_edge_count() ||
                                   inst.ell == 0 || inst.ell >= 2 * inst.k;
        if (out.kind == PresolveKind::ReducedToCore) {
            CHECK_FALSE(guard_applies);
        } else {
            ++decided;
            CHECK(guard_applies);
            auto expect = oracle_solve(inst);
            CHECK((out.kind == PresolveKind::DecidedYes) == expect.has_value());
            if (out.kind == PresolveKind::DecidedYes)
                CHECK(verify_solution(inst, out.witness).valid);
        }
    }
    CHECK(decided > 0);
}
