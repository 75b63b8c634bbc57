#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msvc/errors.hpp"

namespace msvc {

using Vertex = std::uint32_t;

// Undirected edge, normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw ContractError("self-loop {" + std::to_string(a) + "} is not an edge");
    return a < b ? Edge{a, b} : Edge{b, a};
}

struct StaticGraph {
    Vertex n = 0;
    std::vector<Edge> edges; // sorted, unique, endpoints < n

    bool has_edge(Vertex u, Vertex v) const;
    std::vector<std::uint32_t> degrees() const;
};

// Shared vertex set, one static graph per time step. tau() >= 1.
struct TemporalGraph {
    Vertex n = 0;
    std::vector<StaticGraph> layers;

    std::size_t tau() const { return layers.size(); }
    std::uint64_t temporal_edge_count() const;
};

struct Instance {
    TemporalGraph graph;
    std::uint64_t k = 0;   // per-layer cover budget
    std::uint64_t ell = 0; // symmetric-difference budget
};

// One vertex set per layer; each set sorted ascending.
struct CoverSequence {
    std::vector<std::vector<Vertex>> sets;
};

enum class ViolationKind { UncoveredEdge, SizeExceeded, DiffExceeded, LengthMismatch };

// index is the 0-based layer (UncoveredEdge, SizeExceeded) or transition
// (DiffExceeded); a/b carry the witness: the edge endpoints, the offending
// size vs. k, the offending diff vs. ell, or the got/expected lengths.
struct Violation {
    ViolationKind kind;
    std::size_t index = 0;
    std::uint64_t a = 0, b = 0;
};

std::string violation_to_string(const Violation&);

struct VerificationReport {
    bool valid = false;
    std::vector<Violation> violations;
};

// Instance format: `c` comment lines, one `p msvc <n> <tau> <k> <ell>` header,
// edge lines `e <t> <u> <v>` with 1-based t and 0-based u, v.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance&);

// Solution format: tau lines `s <t> <v...>` with 1-based t.
CoverSequence parse_solution(const std::string& text);
std::string serialize_solution(const CoverSequence&);

StaticGraph underlying_graph(const TemporalGraph&);

// Checks (a) sequence length, (b) per-layer coverage, (c) |S_i| <= k,
// (d) |S_i symdiff S_{i+1}| <= ell. All violations are enumerated.
VerificationReport verify_solution(const Instance&, const CoverSequence&);

} // namespace msvc
