#include "msvc/kernelization.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace msvc {
namespace {

std::uint64_t k_squared_sat(std::uint64_t k) {
    return k > 0xFFFFFFFFull ? UINT64_MAX : k * k;
}

// Rebuilds an instance on the surviving vertices (order-preserving dense
// remap). `keep[v]` decides survival.
Instance compact(const Instance& inst, const std::vector<char>& keep,
                 std::vector<Vertex>& deleted) {
    const Vertex n = inst.graph.n;
    std::vector<Vertex> remap(n, 0);
    Vertex next = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (keep[v]) {
            remap[v] = next++;
        } else {
            deleted.push_back(v);
        }
    }
    Instance out;
    out.k = inst.k;
    out.ell = inst.ell;
    out.graph.n = next;
    out.graph.layers.reserve(inst.graph.tau());
    for (const auto& layer : inst.graph.layers) {
        StaticGraph g{next, {}};
        g.edges.reserve(layer.edges.size());
        for (const auto& [u, v] : layer.edges) g.edges.push_back(make_edge(remap[u], remap[v]));
        std::sort(g.edges.begin(), g.edges.end());
        out.graph.layers.push_back(std::move(g));
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> layer_degrees(const Instance& inst) {
    std::vector<std::vector<std::uint32_t>> deg(inst.graph.tau());
    for (std::size_t i = 0; i < inst.graph.tau(); ++i) deg[i] = inst.graph.layers[i].degrees();
    return deg;
}

// Positions of companion entries, in creation order.
std::vector<Vertex> companion_positions(const std::vector<ReducedOrigin>& origin) {
    std::vector<Vertex> out;
    for (std::size_t r = 0; r < origin.size(); ++r)
        if (origin[r].is_companion) out.push_back(static_cast<Vertex>(r));
    return out;
}

KernelResult one_edge_shortcut(const Instance& inst, CoverSequence witness) {
    KernelResult res;
    res.reduced = inst;
    res.verdict = KernelVerdict::DecidedYes;
    res.witness = std::move(witness);
    res.original_n = inst.graph.n;
    res.origin.resize(inst.graph.n);
    for (Vertex v = 0; v < inst.graph.n; ++v) res.origin[v] = {v, false};
    return res;
}

} // namespace

std::pair<Instance, std::vector<Vertex>> rr_isolated(const Instance& inst) {
    std::vector<char> touched(inst.graph.n, 0);
    for (const auto& layer : inst.graph.layers)
        for (const auto& [u, v] : layer.edges) {
            touched[u] = 1;
            touched[v] = 1;
        }
    std::vector<Vertex> deleted;
    Instance reduced = compact(inst, touched, deleted);
    return {std::move(reduced), std::move(deleted)};
}

std::pair<Instance, std::vector<HighDegreeRewrite>> rr_high_degree(const Instance& inst) {
    Instance work = inst;
    const std::size_t tau = work.graph.tau();
    auto deg = layer_degrees(work);
    std::vector<HighDegreeRewrite> rewrites;
    std::vector<char> layer_dirty(tau, 0);

    const Vertex original_n = work.graph.n;
    for (Vertex v = 0; v < original_n; ++v) {
        std::vector<std::size_t> hit;
        for (std::size_t i = 0; i < tau; ++i)
            if (deg[i][v] > work.k) hit.push_back(i);
        if (hit.empty()) continue;

        const Vertex w = work.graph.n++;
        for (auto& layer : work.graph.layers) layer.n = work.graph.n;
        for (std::size_t i = 0; i < tau; ++i) deg[i].push_back(0);

        for (std::size_t i : hit) {
            auto& edges = work.graph.layers[i].edges;
            std::vector<Edge> kept;
            kept.reserve(edges.size());
            for (const auto& [a, b] : edges) {
                if (a == v || b == v) {
                    --deg[i][a];
                    --deg[i][b];
                } else {
                    kept.push_back({a, b});
                }
            }
            kept.push_back(make_edge(v, w));
            ++deg[i][v];
            ++deg[i][w];
            edges = std::move(kept);
            layer_dirty[i] = 1;
        }
        rewrites.push_back({v, w, std::move(hit)});
    }
    for (std::size_t i = 0; i < tau; ++i)
        if (layer_dirty[i])
            std::sort(work.graph.layers[i].edges.begin(), work.graph.layers[i].edges.end());
    return {std::move(work), std::move(rewrites)};
}

std::optional<std::size_t> rr_no_instance(const Instance& inst) {
    // Fixpoint contract: no isolated vertex, no vertex over degree k.
    std::vector<char> touched(inst.graph.n, 0);
    for (std::size_t i = 0; i < inst.graph.tau(); ++i) {
        const auto deg = inst.graph.layers[i].degrees();
        for (Vertex v = 0; v < inst.graph.n; ++v) {
            if (deg[v] > inst.k)
                throw ContractError("rr_no_instance called before fixpoint: vertex " +
                                    std::to_string(v) + " has degree " + std::to_string(deg[v]) +
                                    " > k in layer " + std::to_string(i + 1));
            if (deg[v] > 0) touched[v] = 1;
        }
    }
    for (Vertex v = 0; v < inst.graph.n; ++v)
        if (!touched[v])
            throw ContractError("rr_no_instance called before fixpoint: vertex " +
                                std::to_string(v) + " is isolated");

    const std::uint64_t limit = k_squared_sat(inst.k);
    for (std::size_t i = 0; i < inst.graph.tau(); ++i)
        if (inst.graph.layers[i].edges.size() > limit) return i;
    return std::nullopt;
}

KernelResult kernelize(const Instance& inst) {
    KernelResult res;
    res.original_n = inst.graph.n;
    res.origin.resize(inst.graph.n);
    for (Vertex v = 0; v < inst.graph.n; ++v) res.origin[v] = {v, false};

    Instance work = inst;
    bool changed = true;
    while (changed) {
        changed = false;

        auto [g1, dels] = rr_isolated(work);
        if (!dels.empty()) {
            std::vector<char> keep(work.graph.n, 1);
            for (Vertex d : dels) {
                keep[d] = 0;
                // Companions keep their forced edge {v, w_v}, so only
                // original vertices can become isolated.
                assert(!res.origin[d].is_companion);
                res.deleted.push_back(res.origin[d].original);
                res.steps.push_back({ReplayStep::Delete, res.deleted.size() - 1});
            }
            std::vector<ReducedOrigin> next_origin;
            next_origin.reserve(g1.graph.n);
            for (Vertex v = 0; v < work.graph.n; ++v)
                if (keep[v]) next_origin.push_back(res.origin[v]);
            res.origin = std::move(next_origin);
            work = std::move(g1);
            changed = true;
        }

        // The high-degree rule diverges for k = 0 (any edge re-triggers it);
        // RR1 plus the no-instance rule already decide that case.
        if (work.k >= 1) {
            auto [g2, rws] = rr_high_degree(work);
            if (!rws.empty()) {
                for (auto& rw : rws) {
                    res.rewrites.push_back(
                        {res.origin[rw.v].original, rw.companion, std::move(rw.layers)});
                    res.steps.push_back({ReplayStep::Rewrite, res.rewrites.size() - 1});
                    res.origin.push_back({res.origin[rw.v].original, true});
                }
                work = std::move(g2);
                changed = true;
            }
        }
    }

    res.reduced = std::move(work);
    // Companion ids may have shifted under later deletions; re-read them.
    const auto companions = companion_positions(res.origin);
    assert(companions.size() == res.rewrites.size());
    for (std::size_t i = 0; i < companions.size(); ++i) res.rewrites[i].companion = companions[i];

    if (res.reduced.k == 0) {
        // RR2 is skipped for k = 0, so rr_no_instance's fixpoint contract
        // cannot hold; any remaining edge certifies no directly (> k^2 = 0).
        res.verdict = KernelVerdict::Open;
        for (std::size_t i = 0; i < res.reduced.graph.tau(); ++i)
            if (!res.reduced.graph.layers[i].edges.empty()) {
                res.verdict = KernelVerdict::DecidedNo;
                res.no_layer = i;
                break;
            }
    } else if (auto layer = rr_no_instance(res.reduced)) {
        res.verdict = KernelVerdict::DecidedNo;
        res.no_layer = layer;
    } else {
        res.verdict = KernelVerdict::Open;
    }
    return res;
}

CoverSequence lift_solution(const KernelResult& res, const CoverSequence& seq) {
    auto report = verify_solution(res.reduced, seq);
    if (!report.valid)
        throw ContractError("lift_solution: sequence does not verify against the reduced instance (" +
                            violation_to_string(report.violations.front()) + ")");

    CoverSequence lifted;
    lifted.sets.resize(seq.sets.size());
    for (std::size_t i = 0; i < seq.sets.size(); ++i) {
        std::vector<Vertex> set;
        set.reserve(seq.sets[i].size() + 1);
        for (Vertex r : seq.sets[i]) set.push_back(res.origin[r].original);
        for (const auto& rw : res.rewrites)
            if (std::binary_search(rw.layers.begin(), rw.layers.end(), i)) set.push_back(rw.v);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        lifted.sets[i] = std::move(set);
    }
    return lifted;
}

KernelResult kernelize_one_edge(const Instance& inst) {
    const std::size_t tau = inst.graph.tau();
    for (std::size_t i = 0; i < tau; ++i)
        if (inst.graph.layers[i].edges.size() != 1)
            throw ContractError("kernelize_one_edge: layer " + std::to_string(i + 1) + " has " +
                                std::to_string(inst.graph.layers[i].edges.size()) +
                                " edges, expected exactly 1");

    if (inst.k >= tau) {
        // One endpoint per underlying edge covers everything; m <= tau <= k.
        std::vector<Vertex> set;
        for (const auto& [u, v] : underlying_graph(inst.graph).edges) set.push_back(u);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        CoverSequence seq;
        seq.sets.assign(tau, std::move(set));
        return one_edge_shortcut(inst, std::move(seq));
    }
    if (inst.ell >= 2 && inst.k >= 1) {
        // Per-layer singletons; consecutive singletons differ by at most 2.
        CoverSequence seq;
        seq.sets.reserve(tau);
        for (const auto& layer : inst.graph.layers)
            seq.sets.push_back({layer.edges.front().first});
        return one_edge_shortcut(inst, std::move(seq));
    }

    KernelResult res;
    res.original_n = inst.graph.n;
    auto [reduced, dels] = rr_isolated(inst);
    for (Vertex d : dels) {
        res.deleted.push_back(d);
        res.steps.push_back({ReplayStep::Delete, res.deleted.size() - 1});
    }
    res.origin.reserve(reduced.graph.n);
    std::vector<char> keep(inst.graph.n, 1);
    for (Vertex d : dels) keep[d] = 0;
    for (Vertex v = 0; v < inst.graph.n; ++v)
        if (keep[v]) res.origin.push_back({v, false});
    res.reduced = std::move(reduced);
    res.verdict = KernelVerdict::Open;
    return res;
}

std::string serialize_replay(const KernelResult& res) {
    std::ostringstream out;
    for (const auto& step : res.steps) {
        if (step.kind == ReplayStep::Delete) {
            out << "d " << res.deleted[step.idx] << '\n';
        } else {
            const auto& rw = res.rewrites[step.idx];
            out << "h " << rw.v << ' ' << rw.companion;
            for (std::size_t layer : rw.layers) out << ' ' << (layer + 1);
            out << '\n';
        }
    }
    return out.str();
}

} // namespace msvc
