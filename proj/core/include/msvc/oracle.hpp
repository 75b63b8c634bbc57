#pragma once

#include <cstdint>
#include <optional>

#include "msvc/temporal_graph.hpp"

namespace msvc {

// Independent ground truth for the property tests: a forward dynamic program
// over ALL covers of size <= k per layer (not restricted to sizes k-1/k), with
// its own cover enumeration. Deterministic; candidates in lexicographic
// order. Throws ResourceError when the projected enumeration or transition
// work exceeds work_budget. Never called by the solver pipeline.
std::optional<CoverSequence> oracle_solve(const Instance&,
                                          std::uint64_t work_budget = 10'000'000);

} // namespace msvc
