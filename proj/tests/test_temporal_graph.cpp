#include <doctest.h>

#include "msvc/temporal_graph.hpp"
#include "test_support.hpp"

using namespace msvc;
namespace ts = test_support;

TEST_CASE("parse_instance reads the worked example") {
    Instance inst = parse_instance(ts::example_text());
    CHECK(inst.graph.n == 4);
    CHECK(inst.graph.tau() == 3);
    CHECK(inst.k == 2);
    CHECK(inst.ell == 1);
    CHECK(inst.graph.temporal_edge_count() == 8);
    CHECK(inst.graph.layers[0].edges ==
          std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(inst.graph.layers[1].edges == std::vector<Edge>{{0, 2}});
}

TEST_CASE("parse_instance handles a header-only instance") {
    Instance inst = parse_instance("p msvc 1 1 0 0\n");
    CHECK(inst.graph.n == 1);
    CHECK(inst.graph.tau() == 1);
    CHECK(inst.graph.layers[0].edges.empty());
}

TEST_CASE("parse_instance rejects bad input with line numbers") {
    const std::string base = "p msvc 4 3 2 1\n";
    CHECK_THROWS_WITH_AS(parse_instance(base + "e 4 0 1\n"),
                         doctest::Contains("time index"), ParseError);
    try {
        parse_instance(base + "e 4 0 1\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_instance(base + "e 1 0 4\n"), ParseError); // endpoint range
    CHECK_THROWS_AS(parse_instance(base + "e 1 2 2\n"), ParseError); // self-loop
    CHECK_THROWS_AS(parse_instance("e 1 0 1\n"), ParseError);        // edge before header
    CHECK_THROWS_AS(parse_instance("p msvc 4 3 2\n"), ParseError);   // short header
    CHECK_THROWS_AS(parse_instance(""), ParseError);                 // no header
    CHECK_THROWS_AS(parse_instance(base + "x 1 2\n"), ParseError);   // unknown type
}

TEST_CASE("parse deduplicates temporal edges") {
    Instance inst = parse_instance("p msvc 3 1 1 0\ne 1 0 1\ne 1 1 0\ne 1 0 1\n");
    CHECK(inst.graph.layers[0].edges == std::vector<Edge>{{0, 1}});
    // serialized once
    const std::string text = serialize_instance(inst);
    CHECK(text == "p msvc 3 1 1 0\ne 1 0 1\n");
}

TEST_CASE("serialize then parse is the identity") {
    auto check_roundtrip = [](const Instance& inst) {
        Instance again = parse_instance(serialize_instance(inst));
        CHECK(again.graph.n == inst.graph.n);
        REQUIRE(again.graph.tau() == inst.graph.tau());
        for (std::size_t i = 0; i < inst.graph.tau(); ++i)
            CHECK(again.graph.layers[i].edges == inst.graph.layers[i].edges);
        CHECK(again.k == inst.k);
        CHECK(again.ell == inst.ell);
    };
    check_roundtrip(ts::example_instance());
    check_roundtrip(parse_instance("p msvc 1 1 0 0\n"));

    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) check_roundtrip(ts::random_instance(rng));
}

TEST_CASE("solution text round-trips") {
    CoverSequence seq = ts::example_solution();
    CoverSequence again = parse_solution(serialize_solution(seq));
    CHECK(again.sets == seq.sets);
    CHECK_THROWS_AS(parse_solution("s 2 0\n"), ParseError); // must start at t=1
    // empty set line is legal
    CoverSequence empty = parse_solution("s 1\n");
    REQUIRE(empty.sets.size() == 1);
    CHECK(empty.sets[0].empty());
}

TEST_CASE("underlying_graph is the union of the layers") {
    SUBCASE("worked example is the complete graph on 4 vertices") {
        StaticGraph under = underlying_graph(ts::example_instance().graph);
        CHECK(under.edges.size() == 6);
        CHECK(under.edges == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }
    SUBCASE("single layer is the layer itself") {
        TemporalGraph g{3, {StaticGraph{3, {{0, 1}}}}};
        CHECK(underlying_graph(g).edges == std::vector<Edge>{{0, 1}});
    }
    SUBCASE("all layers empty") {
        TemporalGraph g{3, {StaticGraph{3, {}}, StaticGraph{3, {}}}};
        CHECK(underlying_graph(g).edges.empty());
    }
    SUBCASE("matches direct recomputation on random instances") {
        std::mt19937_64 rng(11);
        for (int it = 0; it < 60; ++it) {
            Instance inst = ts::random_instance(rng);
            StaticGraph under = underlying_graph(inst.graph);
            std::set<Edge> expect;
            for (const auto& layer : inst.graph.layers)
                expect.insert(layer.edges.begin(), layer.edges.end());
            CHECK(under.edges == std::vector<Edge>(expect.begin(), expect.end()));
        }
    }
}

TEST_CASE("verify_solution on the worked example") {
    Instance inst = ts::example_instance();

    SUBCASE("the highlighted solution is valid") {
        auto report = verify_solution(inst, ts::example_solution());
        CHECK(report.valid);
        CHECK(report.violations.empty());
    }
    SUBCASE("a transition over the budget is flagged") {
        CoverSequence bad{{{1, 2}, {0, 2}, {0, 2}}};
        auto report = verify_solution(inst, bad);
        CHECK_FALSE(report.valid);
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].kind == ViolationKind::DiffExceeded);
        CHECK(report.violations[0].index == 0);
        CHECK(report.violations[0].a == 2);
    }
    SUBCASE("an uncovered layer edge is flagged") {
        CoverSequence bad{{{1, 2}, {}, {0, 2}}};
        auto report = verify_solution(inst, bad);
        CHECK_FALSE(report.valid);
        bool saw_uncovered = false;
        for (const auto& v : report.violations)
            if (v.kind == ViolationKind::UncoveredEdge && v.index == 1 && v.a == 0 && v.b == 2)
                saw_uncovered = true;
        CHECK(saw_uncovered);
    }
    SUBCASE("length mismatch") {
        CoverSequence bad{{{1, 2}, {2}}};
        auto report = verify_solution(inst, bad);
        CHECK_FALSE(report.valid);
        CHECK(report.violations[0].kind == ViolationKind::LengthMismatch);
    }
    SUBCASE("all violations are enumerated, not just the first") {
        CoverSequence bad{{{}, {}, {0, 1, 2}}};
        auto report = verify_solution(inst, bad);
        std::size_t uncovered = 0, size_exceeded = 0;
        for (const auto& v : report.violations) {
            uncovered += v.kind == ViolationKind::UncoveredEdge;
            size_exceeded += v.kind == ViolationKind::SizeExceeded;
        }
        CHECK(uncovered == 4); // 3 in layer 1, 1 in layer 2
        CHECK(size_exceeded == 1);
    }
}

TEST_CASE("verify_solution agrees with an independent re-implementation") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 300; ++it) {
        Instance inst = ts::random_instance(rng);
        CoverSequence seq;
        const std::size_t len = rng() % 3 == 0 ? inst.graph.tau() + rng() % 2
                                               : inst.graph.tau();
        for (std::size_t i = 0; i < len; ++i) {
            std::vector<Vertex> set;
            for (Vertex v = 0; v < inst.graph.n; ++v)
                if (rng() % 3 == 0) set.push_back(v);
            seq.sets.push_back(std::move(set));
        }
        CHECK(verify_solution(inst, seq).valid == ts::verify_reimpl(inst, seq));
    }
}

TEST_CASE("violation_to_string names the violation kind") {
    CHECK(violation_to_string({ViolationKind::DiffExceeded, 0, 2, 1}) ==
          "transition 1: diff-exceeded 2 > ell=1");
    CHECK(violation_to_string({ViolationKind::LengthMismatch, 0, 2, 3}) ==
          "length-mismatch 2 != tau=3");
}
