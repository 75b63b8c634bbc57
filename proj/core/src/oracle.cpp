#include "msvc/oracle.hpp"

#include <algorithm>

#include "msvc/bitset.hpp"
#include "msvc/errors.hpp"

namespace msvc {
namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

// Saturating sum_{i <= k} C(n, i): the number of candidate sets per layer.
std::uint64_t count_subsets_up_to(std::uint64_t n, std::uint64_t k) {
    std::uint64_t total = 0, binom = 1;
    for (std::uint64_t i = 0;; ++i) {
        total = sat_add(total, binom);
        if (i >= k || i >= n || total == UINT64_MAX) break;
        binom = sat_mul(binom, n - i);
        if (binom != UINT64_MAX) binom /= (i + 1);
    }
    return total;
}

// Include/exclude walk over the vertices, pruned at k picks; leaves that
// cover the layer are recorded. Kept deliberately separate from the
// static_vc enumeration code.
void collect_covers(const StaticGraph& layer, Vertex v, std::uint64_t left, Bitset& cur,
                    std::vector<Bitset>& out) {
    if (v == layer.n) {
        for (const auto& [a, b] : layer.edges)
            if (!cur.test(a) && !cur.test(b)) return;
        out.push_back(cur);
        return;
    }
    if (left > 0) {
        cur.set(v);
        collect_covers(layer, v + 1, left - 1, cur, out);
        cur.reset(v);
    }
    collect_covers(layer, v + 1, left, cur, out);
}

} // namespace

std::optional<CoverSequence> oracle_solve(const Instance& inst, std::uint64_t work_budget) {
    const auto& g = inst.graph;
    const std::size_t tau = g.tau();

    const std::uint64_t per_layer = count_subsets_up_to(g.n, inst.k);
    if (sat_mul(per_layer, tau) > work_budget)
        throw ResourceError("oracle: projected state count " +
                            std::to_string(sat_mul(per_layer, tau)) + " exceeds work budget " +
                            std::to_string(work_budget));

    std::vector<std::vector<Bitset>> states(tau);
    for (std::size_t i = 0; i < tau; ++i) {
        Bitset cur(g.n);
        collect_covers(g.layers[i], 0, inst.k, cur, states[i]);
        std::sort(states[i].begin(), states[i].end(),
                  [](const Bitset& a, const Bitset& b) { return set_lex_less(a, b); });
        if (states[i].empty()) return std::nullopt;
    }

    std::uint64_t transitions = 0;
    for (std::size_t i = 0; i + 1 < tau; ++i)
        transitions = sat_add(transitions, sat_mul(states[i].size(), states[i + 1].size()));
    if (transitions > work_budget)
        throw ResourceError("oracle: projected transition count " + std::to_string(transitions) +
                            " exceeds work budget " + std::to_string(work_budget));

    // Forward DP; pred index -1 marks unreachable, first writer wins.
    std::vector<std::vector<std::int64_t>> pred(tau);
    pred[0].assign(states[0].size(), 0); // every first-layer cover is a start state
    for (std::size_t i = 0; i + 1 < tau; ++i) {
        pred[i + 1].assign(states[i + 1].size(), -1);
        for (std::size_t a = 0; a < states[i].size(); ++a) {
            if (pred[i][a] < 0) continue;
            for (std::size_t b = 0; b < states[i + 1].size(); ++b) {
                if (pred[i + 1][b] >= 0) continue;
                if (sym_diff_at_most(states[i][a], states[i + 1][b], inst.ell))
                    pred[i + 1][b] = static_cast<std::int64_t>(a);
            }
        }
    }

    std::int64_t last = -1;
    for (std::size_t b = 0; b < states[tau - 1].size(); ++b)
        if (pred[tau - 1][b] >= 0) { last = static_cast<std::int64_t>(b); break; }
    if (last < 0) return std::nullopt;

    CoverSequence seq;
    seq.sets.resize(tau);
    for (std::size_t i = tau; i-- > 0;) {
        seq.sets[i] = states[i][static_cast<std::size_t>(last)].to_vertices();
        last = pred[i][static_cast<std::size_t>(last)];
    }
    return seq;
}

} // namespace msvc
