#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "msvc/bitset.hpp"
#include "msvc/temporal_graph.hpp"

namespace msvc::config {

// Cap on total configuration-graph nodes; guards the n^k blow-up.
struct NodeBudget {
    std::uint64_t max_nodes = 5'000'000;
};

// Layered DAG of per-layer covers. Nodes of partition i are the vertex covers
// of layer i of size exactly k-1 or k, in lexicographic order. Arcs are not
// materialized: an arc V_i -> V_{i+1} exists iff the symmetric difference of
// the two covers is at most ell; s connects to all of V_1 and all of V_tau
// connect to t.
struct ConfigGraph {
    Vertex n = 0;
    std::uint64_t k = 0, ell = 0;
    std::vector<std::vector<Bitset>> partitions;

    std::uint64_t node_count() const; // includes s and t
    bool arc(std::size_t layer, std::size_t a, std::size_t b) const;
    std::vector<Vertex> cover(std::size_t layer, std::size_t idx) const;
};

// Requires k >= 1. Throws ResourceError when the projected node count exceeds
// the budget, naming the offending layer. Layer construction is spread over
// `threads` workers; the result does not depend on the thread count.
ConfigGraph build_config_graph(const Instance&, const NodeBudget& budget = {},
                               unsigned threads = 1);

// s-t reachability on the configuration graph; the witness path is chosen by
// a forward BFS sweep with ties broken by enumeration order. Answers directly
// for the degenerate budgets k = 0 and k >= n, which the configuration-graph
// definition does not cover.
std::optional<CoverSequence> solve(const Instance&, const NodeBudget& budget = {},
                                   unsigned threads = 1);

// Minimal Multistage Vertex Cover: every set must be an inclusion-minimal
// cover of its layer of size <= k. Partitions hold at most 2^k nodes each.
std::optional<CoverSequence> solve_minimal(const Instance&, const NodeBudget& budget = {},
                                           unsigned threads = 1);

} // namespace msvc::config
