#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msvc/temporal_graph.hpp"

namespace msvc {

// One application of the high-degree rule: in every layer of `layers`, v's
// incident edges were replaced by the single edge {v, companion}.
struct HighDegreeRewrite {
    Vertex v = 0;
    Vertex companion = 0;
    std::vector<std::size_t> layers; // 0-based
};

// Deletes every vertex isolated in the underlying graph; remaining vertices
// are compacted order-preservingly. Returns the deleted ids (input space).
std::pair<Instance, std::vector<Vertex>> rr_isolated(const Instance&);

// Exhaustive high-degree rule. Vertices are processed in ascending id order;
// each one that exceeds degree k in some layer gets a fresh companion
// appended at the end of the id range. A rewrite can raise no degree, so one
// pass suffices. Ids in the returned rewrites refer to the input instance
// (v) and the output instance (companion).
std::pair<Instance, std::vector<HighDegreeRewrite>> rr_high_degree(const Instance&);

// Returns the 0-based index of some layer with more than k^2 edges (a
// no-certificate), or nullopt. Throws ContractError unless rr_isolated and
// rr_high_degree are at a fixpoint.
std::optional<std::size_t> rr_no_instance(const Instance&);

enum class KernelVerdict { Open, DecidedYes, DecidedNo };

// Where a reduced vertex came from: a surviving original, or the companion
// standing in for original vertex `original`.
struct ReducedOrigin {
    Vertex original = 0;
    bool is_companion = false;
};

struct ReplayStep {
    enum Kind { Delete, Rewrite } kind;
    std::size_t idx; // into `deleted` / `rewrites`
};

struct KernelResult {
    Instance reduced;
    KernelVerdict verdict = KernelVerdict::Open;
    std::optional<CoverSequence> witness;  // DecidedYes
    std::optional<std::size_t> no_layer;   // DecidedNo, 0-based
    Vertex original_n = 0;
    std::vector<Vertex> deleted;              // original ids, deletion order
    std::vector<HighDegreeRewrite> rewrites;  // v: original id, companion: reduced id
    std::vector<ReplayStep> steps;            // application order
    std::vector<ReducedOrigin> origin;        // reduced id -> origin
};

// RR1 -> RR2 -> RR1 -> RR3 iterated to a global fixpoint. Open results
// satisfy |V| <= 2 k^2 tau and at most k^2 tau temporal edges.
KernelResult kernelize(const Instance&);

// Replays the log backwards: companions are substituted by their originals,
// and in the layers of a rewrite the rewritten vertex is forced in. Throws
// ContractError when seq does not verify against result.reduced.
CoverSequence lift_solution(const KernelResult&, const CoverSequence&);

// One-edge-layer kernel: decided yes when k >= tau or (k >= 1 and ell >= 2),
// otherwise RR1 exhaustively; at most 2 tau vertices and tau temporal edges
// remain. Throws ContractError if some layer does not have exactly one edge.
KernelResult kernelize_one_edge(const Instance&);

// Text form of the replay log, one rewrite per line:
//   d <original-id>
//   h <original-v> <reduced-companion-id> <1-based layers...>
std::string serialize_replay(const KernelResult&);

} // namespace msvc
