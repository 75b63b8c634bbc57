#pragma once

#include <optional>
#include <string>

#include "msvc/temporal_graph.hpp"

namespace msvc {

enum class PresolveKind { DecidedYes, DecidedNo, ReducedToCore };

struct PresolveOutcome {
    PresolveKind kind = PresolveKind::ReducedToCore;
    CoverSequence witness; // DecidedYes
    std::string reason;    // DecidedNo
    Instance core;         // ReducedToCore: the unchanged instance
};

// If k >= total temporal edge count, a constant cover of the underlying graph
// (one endpoint per edge) works for any ell. Nullopt when the guard fails.
std::optional<CoverSequence> trivial_by_edge_count(const Instance&);

// ell = 0: equivalent to Vertex Cover on the underlying graph; the witness is
// that cover repeated tau times. Nullopt means NO. Throws ContractError when
// called with ell != 0.
std::optional<CoverSequence> solve_ell_zero(const Instance&);

// ell >= 2k: layers are independent, any two size-<=k covers differ by <= 2k.
// Nullopt means NO. Throws ContractError when called with ell < 2k.
std::optional<CoverSequence> solve_ell_ge_2k(const Instance&);

// Dispatch order: k = 0, k >= n, trivial_by_edge_count, ell = 0, ell >= 2k,
// otherwise the instance is passed through unchanged.
PresolveOutcome presolve(const Instance&);

} // namespace msvc
