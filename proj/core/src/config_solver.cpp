#include "msvc/config_solver.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "msvc/errors.hpp"
#include "msvc/static_vc.hpp"

namespace msvc::config {
namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

std::uint64_t binom_sat(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        r = sat_mul(r, n - i);
        if (r == UINT64_MAX) return r;
        r /= (i + 1);
    }
    return r;
}

std::vector<Bitset> to_bitsets(Vertex n, const std::vector<std::vector<Vertex>>& sets) {
    std::vector<Bitset> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(Bitset::from_vertices(n, s));
    return out;
}

// Fills partition slots [0, tau) from `enumerate`, optionally in parallel.
// Each layer is independent, so the result is the same for any thread count.
void build_partitions(std::size_t tau, unsigned threads,
                      std::vector<std::vector<Bitset>>& partitions,
                      const std::function<std::vector<Bitset>(std::size_t)>& enumerate) {
    partitions.assign(tau, {});
    if (threads <= 1 || tau <= 1) {
        for (std::size_t i = 0; i < tau; ++i) partitions[i] = enumerate(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tau; i = next.fetch_add(1))
            partitions[i] = enumerate(i);
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(tau));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Forward BFS sweep over the layered DAG. Predecessors hold the first
// in-neighbor in enumeration order; arcs are tested on demand.
std::optional<CoverSequence> sweep(const std::vector<std::vector<Bitset>>& partitions,
                                   std::uint64_t ell) {
    const std::size_t tau = partitions.size();
    std::vector<std::vector<std::int64_t>> pred(tau);
    pred[0].assign(partitions[0].size(), 0); // s -> all of V_1
    for (std::size_t i = 0; i + 1 < tau; ++i) {
        pred[i + 1].assign(partitions[i + 1].size(), -1);
        for (std::size_t b = 0; b < partitions[i + 1].size(); ++b) {
            for (std::size_t a = 0; a < partitions[i].size(); ++a) {
                if (pred[i][a] < 0) continue;
                if (sym_diff_at_most(partitions[i][a], partitions[i + 1][b], ell)) {
                    pred[i + 1][b] = static_cast<std::int64_t>(a);
                    break;
                }
            }
        }
    }
    std::int64_t at = -1;
    for (std::size_t b = 0; b < partitions[tau - 1].size(); ++b)
        if (pred[tau - 1][b] >= 0) { at = static_cast<std::int64_t>(b); break; } // V_tau -> t
    if (at < 0) return std::nullopt;
    CoverSequence seq;
    seq.sets.resize(tau);
    for (std::size_t i = tau; i-- > 0;) {
        seq.sets[i] = partitions[i][static_cast<std::size_t>(at)].to_vertices();
        at = pred[i][static_cast<std::size_t>(at)];
    }
    return seq;
}

// Degenerate budgets sit outside the configuration-graph definition (which
// assumes 0 < k < n): k = 0 admits only empty covers, and for k >= n the
// constant sequence V works for any ell.
std::optional<std::optional<CoverSequence>> dispatch_degenerate(const Instance& inst) {
    const auto& g = inst.graph;
    if (inst.k == 0) {
        for (const auto& layer : g.layers)
            if (!layer.edges.empty()) return std::optional<CoverSequence>{};
        CoverSequence seq;
        seq.sets.assign(g.tau(), {});
        return std::optional<CoverSequence>{seq};
    }
    if (inst.k >= g.n) {
        std::vector<Vertex> all(g.n);
        for (Vertex v = 0; v < g.n; ++v) all[v] = v;
        CoverSequence seq;
        seq.sets.assign(g.tau(), all);
        return std::optional<CoverSequence>{seq};
    }
    return std::nullopt;
}

} // namespace

std::uint64_t ConfigGraph::node_count() const {
    std::uint64_t total = 2;
    for (const auto& p : partitions) total += p.size();
    return total;
}

bool ConfigGraph::arc(std::size_t layer, std::size_t a, std::size_t b) const {
    return sym_diff_at_most(partitions[layer][a], partitions[layer + 1][b], ell);
}

std::vector<Vertex> ConfigGraph::cover(std::size_t layer, std::size_t idx) const {
    return partitions[layer][idx].to_vertices();
}

ConfigGraph build_config_graph(const Instance& inst, const NodeBudget& budget,
                               unsigned threads) {
    if (inst.k < 1) throw ContractError("build_config_graph requires k >= 1");
    const auto& g = inst.graph;

    // Enumerating layer i costs C(n,k) + C(n,k-1) subset tests, so the
    // projection uses that bound rather than the (unknown) cover count.
    const std::uint64_t per_layer =
        sat_add(binom_sat(g.n, inst.k), binom_sat(g.n, inst.k - 1));
    std::uint64_t projected = 2;
    for (std::size_t i = 0; i < g.tau(); ++i) {
        projected = sat_add(projected, per_layer);
        if (projected > budget.max_nodes)
            throw ResourceError("configuration graph: layer " + std::to_string(i + 1) +
                                " raises the projected node count to " +
                                std::to_string(projected) + ", over the budget of " +
                                std::to_string(budget.max_nodes));
    }

    ConfigGraph cg;
    cg.n = g.n;
    cg.k = inst.k;
    cg.ell = inst.ell;
    build_partitions(g.tau(), threads, cg.partitions, [&](std::size_t i) {
        return to_bitsets(g.n, enumerate_covers_kk1(g.layers[i], inst.k));
    });
    return cg;
}

std::optional<CoverSequence> solve(const Instance& inst, const NodeBudget& budget,
                                   unsigned threads) {
    if (auto degenerate = dispatch_degenerate(inst)) return *degenerate;
    ConfigGraph cg = build_config_graph(inst, budget, threads);
    for (const auto& p : cg.partitions)
        if (p.empty()) return std::nullopt;
    return sweep(cg.partitions, inst.ell);
}

std::optional<CoverSequence> solve_minimal(const Instance& inst, const NodeBudget& budget,
                                           unsigned threads) {
    const auto& g = inst.graph;
    const std::uint64_t per_layer =
        inst.k >= 63 ? UINT64_MAX : (std::uint64_t{1} << inst.k);
    if (sat_add(sat_mul(per_layer, g.tau()), 2) > budget.max_nodes)
        throw ResourceError("minimal configuration graph: projected node count exceeds the budget of " +
                            std::to_string(budget.max_nodes));

    std::vector<std::vector<Bitset>> partitions;
    build_partitions(g.tau(), threads, partitions, [&](std::size_t i) {
        return to_bitsets(g.n, enumerate_minimal_covers(g.layers[i], inst.k));
    });
    for (const auto& p : partitions)
        if (p.empty()) return std::nullopt;
    return sweep(partitions, inst.ell);
}

} // namespace msvc::config
