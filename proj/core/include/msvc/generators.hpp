#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msvc/temporal_graph.hpp"

namespace msvc {

// Derived parameters of the clique gadget, all functions of (m, k):
// K = C(k,2), k' = 2K + k + 1, kappa = K + k + 3, tau = 2 m kappa + 1.
struct ConstructionParams {
    std::uint64_t K = 0;
    std::uint64_t k_prime = 0;
    std::uint64_t kappa = 0;
    std::uint64_t tau = 0;
};

// Cyclic vertex order; consecutive pairs (cyclically) must be graph edges.
struct HamCycle {
    std::vector<Vertex> order;
};

// Static-graph input: `c` comments, `p graph <n>`, `e <u> <v>` lines and an
// optional Hamiltonian cycle line `h <v1> ... <vn>`.
struct StaticGraphInput {
    StaticGraph graph;
    std::optional<HamCycle> cycle;
};
StaticGraphInput parse_static_graph(const std::string& text);

// Vertex Cover -> MSVC with ell = 0: one layer per edge (lex order).
Instance gen_vc_to_msvc_ell0(const StaticGraph& g, std::uint64_t k);

// Vertex Cover -> MSVC with ell = 1 and one-edge layers. With tau = 2m the
// horizon is 2 tau; odd layer 2i-1 carries edge e_((i-1) mod m)+1 and even
// layer 2i carries {w_i, w_{i+tau}} over fresh vertices W = {w_1..w_{2 tau}}.
// Budget k' = k + 1.
Instance gen_vc_to_msvc_ell1(const StaticGraph& g, std::uint64_t k);

// Hamiltonian Cubic Vertex Cover -> MSVC with tau = 2, ell = 0, k' = k + 1;
// layer 1 is a path (the cycle minus its lex-smallest edge, plus z, z') and
// layer 2 a tree (the remaining edges with z attached to each component).
Instance gen_hcvc_to_msvc(const StaticGraph& g, std::uint64_t k, const HamCycle& c);

// Clique -> MSVC gadget (five construction rules); ell = 2, budget k', every
// layer a forest. Requires m >= 1 and k >= 2.
std::pair<Instance, ConstructionParams> gen_clique_to_msvc(const StaticGraph& g,
                                                           std::uint64_t k);

// The phase-by-phase solution of the forward direction, built from a k-clique
// of g; verifies against gen_clique_to_msvc(g, k) with every consecutive
// symmetric difference exactly 2.
CoverSequence clique_forward_solution(const StaticGraph& g, std::uint64_t k,
                                      const std::vector<Vertex>& clique);

// Wraps every layer of a clique-gadget instance into a tree: a new vertex x
// becomes the center of a star with k''+1 fresh leaves and attaches to the
// smallest-id vertex of each connected component; k'' = k' + 1.
Instance gen_tree_wrap(const Instance&);

// AND-composition of one-edge-layer instances over a common vertex set with
// common k and ell = 1: concatenates the layer sequences and inserts, between
// consecutive instances, 2k bridge layers (the last layer of the left
// instance, then 2k-1 copies of the right instance's first layer).
Instance gen_and_composition(const std::vector<Instance>& instances);

// One layer per input graph, ell = 2k (AND-composition for the ell >= 2k case).
Instance gen_stack_layers(const std::vector<StaticGraph>& graphs, std::uint64_t k);

// Every potential edge present in every layer independently with probability
// edge_probability; reproducible from the seed.
TemporalGraph gen_random(std::uint64_t seed, Vertex n, std::size_t tau,
                         double edge_probability);

} // namespace msvc
