#include "msvc/static_vc.hpp"

#include <algorithm>

#include "msvc/bitset.hpp"

namespace msvc {
namespace {

// Smallest uncovered edge, relying on the sorted edge list; nullopt if covered.
std::optional<Edge> first_uncovered(const StaticGraph& g, const Bitset& in_cover) {
    for (const auto& [u, v] : g.edges)
        if (!in_cover.test(u) && !in_cover.test(v)) return Edge{u, v};
    return std::nullopt;
}

bool vc_branch(const StaticGraph& g, Bitset& cover, std::uint64_t left,
               std::vector<Vertex>& picked) {
    auto e = first_uncovered(g, cover);
    if (!e) return true;
    if (left == 0) return false;
    for (Vertex w : {e->first, e->second}) {
        cover.set(w);
        picked.push_back(w);
        if (vc_branch(g, cover, left - 1, picked)) return true;
        picked.pop_back();
        cover.reset(w);
    }
    return false;
}

// Exact-size combination enumeration with an uncovered-edge witness prune:
// once the smallest uncovered edge lies entirely below the next candidate
// vertex, no completion can cover it.
void enumerate_exact_size(const StaticGraph& g, std::size_t size, Vertex next, Bitset& cur,
                          std::vector<Vertex>& stack, std::vector<std::vector<Vertex>>& out) {
    auto e = first_uncovered(g, cur);
    if (stack.size() == size) {
        if (!e) out.push_back(stack);
        return;
    }
    if (e && e->second < next) return;
    const std::size_t missing = size - stack.size();
    for (Vertex c = next; c + missing <= g.n; ++c) {
        cur.set(c);
        stack.push_back(c);
        enumerate_exact_size(g, size, c + 1, cur, stack, out);
        stack.pop_back();
        cur.reset(c);
    }
}

std::vector<std::vector<Vertex>> covers_of_size(const StaticGraph& g, std::size_t size) {
    std::vector<std::vector<Vertex>> out;
    if (size > g.n) return out;
    Bitset cur(g.n);
    std::vector<Vertex> stack;
    enumerate_exact_size(g, size, 0, cur, stack, out);
    return out;
}

bool list_lex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_minimal_cover(const StaticGraph& g, const std::vector<Vertex>& cover) {
    Bitset in = Bitset::from_vertices(g.n, cover);
    for (Vertex w : cover) {
        // w needs a private edge: one whose other endpoint is outside the cover
        bool has_private = false;
        for (const auto& [u, v] : g.edges) {
            if (u == w && !in.test(v)) { has_private = true; break; }
            if (v == w && !in.test(u)) { has_private = true; break; }
        }
        if (!has_private) return false;
    }
    return true;
}

void minimal_branch(const StaticGraph& g, Bitset& cover, std::uint64_t left,
                    std::vector<Vertex>& picked, std::vector<std::vector<Vertex>>& leaves) {
    auto e = first_uncovered(g, cover);
    if (!e) {
        std::vector<Vertex> sorted = picked;
        std::sort(sorted.begin(), sorted.end());
        leaves.push_back(std::move(sorted));
        return;
    }
    if (left == 0) return;
    for (Vertex w : {e->first, e->second}) {
        cover.set(w);
        picked.push_back(w);
        minimal_branch(g, cover, left - 1, picked, leaves);
        picked.pop_back();
        cover.reset(w);
    }
}

} // namespace

std::optional<std::vector<Vertex>> vc_solve(const StaticGraph& g, std::uint64_t k) {
    Bitset cover(g.n);
    std::vector<Vertex> picked;
    if (!vc_branch(g, cover, k, picked)) return std::nullopt;
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::vector<std::vector<Vertex>> enumerate_covers_kk1(const StaticGraph& g, std::uint64_t k) {
    if (k < 1) throw ContractError("enumerate_covers_kk1 requires k >= 1");
    auto lo = covers_of_size(g, static_cast<std::size_t>(k - 1));
    std::vector<std::vector<Vertex>> hi;
    if (k <= g.n) hi = covers_of_size(g, static_cast<std::size_t>(k));
    std::vector<std::vector<Vertex>> out;
    out.reserve(lo.size() + hi.size());
    std::merge(lo.begin(), lo.end(), hi.begin(), hi.end(), std::back_inserter(out),
               list_lex_less);
    return out;
}

std::vector<std::vector<Vertex>> enumerate_minimal_covers(const StaticGraph& g,
                                                          std::uint64_t k) {
    Bitset cover(g.n);
    std::vector<Vertex> picked;
    std::vector<std::vector<Vertex>> leaves;
    minimal_branch(g, cover, k, picked, leaves);
    std::sort(leaves.begin(), leaves.end(), list_lex_less);
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());
    std::vector<std::vector<Vertex>> out;
    for (auto& s : leaves)
        if (is_minimal_cover(g, s)) out.push_back(std::move(s));
    return out;
}

} // namespace msvc
