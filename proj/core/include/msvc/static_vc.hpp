#pragma once

#include <optional>
#include <vector>

#include "msvc/temporal_graph.hpp"

namespace msvc {

// Folklore bounded search tree: branch on the endpoints of the smallest
// uncovered edge. Returns some cover of size <= k, or nullopt.
std::optional<std::vector<Vertex>> vc_solve(const StaticGraph& g, std::uint64_t k);

// All vertex covers of size exactly k-1 or k, each once, ordered
// lexicographically as sorted vertex lists. Requires k >= 1.
std::vector<std::vector<Vertex>> enumerate_covers_kk1(const StaticGraph& g, std::uint64_t k);

// All inclusion-minimal vertex covers of size <= k, each once, in
// lexicographic order. At most 2^k sets (search-tree leaves).
std::vector<std::vector<Vertex>> enumerate_minimal_covers(const StaticGraph& g, std::uint64_t k);

} // namespace msvc
