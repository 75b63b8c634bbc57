#include "msvc/presolve.hpp"

#include <algorithm>

#include "msvc/static_vc.hpp"

namespace msvc {
namespace {

CoverSequence constant_sequence(std::size_t tau, std::vector<Vertex> set) {
    CoverSequence seq;
    seq.sets.assign(tau, std::move(set));
    return seq;
}

} // namespace

std::optional<CoverSequence> trivial_by_edge_count(const Instance& inst) {
    if (inst.k < inst.graph.temporal_edge_count()) return std::nullopt;
    // One endpoint per underlying edge; at most m <= k vertices.
    std::vector<Vertex> set;
    for (const auto& [u, v] : underlying_graph(inst.graph).edges) set.push_back(u);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return constant_sequence(inst.graph.tau(), std::move(set));
}

std::optional<CoverSequence> solve_ell_zero(const Instance& inst) {
    if (inst.ell != 0) throw ContractError("solve_ell_zero requires ell = 0");
    auto cover = vc_solve(underlying_graph(inst.graph), inst.k);
    if (!cover) return std::nullopt;
    return constant_sequence(inst.graph.tau(), std::move(*cover));
}

std::optional<CoverSequence> solve_ell_ge_2k(const Instance& inst) {
    if (inst.ell / 2 < inst.k) throw ContractError("solve_ell_ge_2k requires ell >= 2k");
    CoverSequence seq;
    seq.sets.reserve(inst.graph.tau());
    for (const auto& layer : inst.graph.layers) {
        auto cover = vc_solve(layer, inst.k);
        if (!cover) return std::nullopt;
        seq.sets.push_back(std::move(*cover));
    }
    return seq;
}

PresolveOutcome presolve(const Instance& inst) {
    PresolveOutcome out;
    const auto& g = inst.graph;

    if (inst.k == 0) {
        for (std::size_t i = 0; i < g.tau(); ++i)
            if (!g.layers[i].edges.empty()) {
                out.kind = PresolveKind::DecidedNo;
                out.reason = "k = 0 but layer " + std::to_string(i + 1) + " has edges";
                return out;
            }
        out.kind = PresolveKind::DecidedYes;
        out.witness = constant_sequence(g.tau(), {});
        return out;
    }

    if (inst.k >= g.n) {
        std::vector<Vertex> all(g.n);
        for (Vertex v = 0; v < g.n; ++v) all[v] = v;
        out.kind = PresolveKind::DecidedYes;
        out.witness = constant_sequence(g.tau(), std::move(all));
        return out;
    }

    if (auto seq = trivial_by_edge_count(inst)) {
        out.kind = PresolveKind::DecidedYes;
        out.witness = std::move(*seq);
        return out;
    }

    if (inst.ell == 0) {
        if (auto seq = solve_ell_zero(inst)) {
            out.kind = PresolveKind::DecidedYes;
            out.witness = std::move(*seq);
        } else {
            out.kind = PresolveKind::DecidedNo;
            out.reason = "ell = 0 and the underlying graph has no vertex cover of size " +
                         std::to_string(inst.k);
        }
        return out;
    }

    if (inst.ell / 2 >= inst.k) {
        if (auto seq = solve_ell_ge_2k(inst)) {
            out.kind = PresolveKind::DecidedYes;
            out.witness = std::move(*seq);
        } else {
            out.kind = PresolveKind::DecidedNo;
            out.reason = "ell >= 2k and some layer has no vertex cover of size " +
                         std::to_string(inst.k);
        }
        return out;
    }

    out.kind = PresolveKind::ReducedToCore;
    out.core = inst;
    return out;
}

} // namespace msvc
