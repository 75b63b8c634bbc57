#include "msvc/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace msvc {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::uint64_t parse_u64(const std::string& tok, int line, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("expected non-negative integer for ") + what +
                                   ", got '" + tok + "'");
    return value;
}

std::vector<Edge> sorted_edges(const StaticGraph& g) {
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

void finish_layer(StaticGraph& layer) {
    std::sort(layer.edges.begin(), layer.edges.end());
    layer.edges.erase(std::unique(layer.edges.begin(), layer.edges.end()), layer.edges.end());
}

// Minimum-id representative per connected component of (n, edges), singletons
// included.
std::vector<Vertex> component_reps(Vertex n, const std::vector<Edge>& edges) {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<Vertex(Vertex)> find = [&](Vertex x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [u, v] : edges) {
        Vertex a = find(u), b = find(v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<Vertex> reps;
    for (Vertex v = 0; v < n; ++v)
        if (find(v) == v) reps.push_back(v); // path-min union keeps the root minimal
    return reps;
}

// Id layout of the clique gadget. Vertex blocks in order: the input vertices,
// one vertex per input edge, the U blocks, the centers, then the leaf blocks
// (odd centers first, then the U vertices); every star center owns a private
// reusable block of k'+1 leaves.
struct CliqueLayout {
    Vertex n = 0;
    std::uint64_t m = 0, K = 0, kp = 0, kappa = 0, tau = 0;
    std::vector<Edge> edges; // sorted input edges
    std::uint64_t base_edge = 0, base_u = 0, base_c = 0, base_leaf = 0, total = 0;

    CliqueLayout(const StaticGraph& g, std::uint64_t k) {
        edges = sorted_edges(g);
        n = g.n;
        m = edges.size();
        if (k > 0xFFFFFFFFull) throw ContractError("k too large for the clique gadget");
        using u128 = unsigned __int128;
        const u128 K128 = u128(k) * (k - 1) / 2;
        const u128 kp128 = 2 * K128 + k + 1;
        const u128 kappa128 = K128 + k + 3;
        const u128 tau128 = 2 * u128(m) * kappa128 + 1;
        const u128 leaf_blocks = (u128(m) * kappa128 + 1) + K128 * (kappa128 + 1);
        const u128 total128 =
            u128(n) + m + K128 * (kappa128 + 1) + tau128 + leaf_blocks * (kp128 + 1);
        if (total128 > 0xFFFFFFFFull)
            throw ContractError("clique gadget would need too many vertices");
        K = static_cast<std::uint64_t>(K128);
        kp = static_cast<std::uint64_t>(kp128);
        kappa = static_cast<std::uint64_t>(kappa128);
        tau = static_cast<std::uint64_t>(tau128);
        base_edge = n;
        base_u = base_edge + m;
        base_c = base_u + K * (kappa + 1);
        base_leaf = base_c + tau;
        total = static_cast<std::uint64_t>(total128);
    }

    Vertex edge_vertex(std::uint64_t i) const { // i in [1, m]
        return static_cast<Vertex>(base_edge + i - 1);
    }
    Vertex u_vertex(std::uint64_t t, std::uint64_t j) const { // t in [1, kappa+1], j in [1, K]
        return static_cast<Vertex>(base_u + (t - 1) * K + (j - 1));
    }
    Vertex center(std::uint64_t i) const { // i in [1, tau]
        return static_cast<Vertex>(base_c + i - 1);
    }
    Vertex leaf(std::uint64_t block, std::uint64_t q) const {
        return static_cast<Vertex>(base_leaf + block * (kp + 1) + q);
    }
    std::uint64_t odd_center_block(std::uint64_t i) const { return (i - 1) / 2; }
    std::uint64_t u_block(std::uint64_t t, std::uint64_t j) const {
        return (m * kappa + 1) + (t - 1) * K + (j - 1);
    }
};

void add_star(StaticGraph& layer, Vertex middle, const CliqueLayout& ly, std::uint64_t block) {
    for (std::uint64_t q = 0; q <= ly.kp; ++q)
        layer.edges.push_back(make_edge(middle, ly.leaf(block, q)));
}

bool covers_layer(const StaticGraph& layer, const std::vector<Vertex>& sorted_set) {
    auto in = [&](Vertex v) {
        return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
    };
    for (const auto& [u, v] : layer.edges)
        if (!in(u) && !in(v)) return false;
    return true;
}

std::vector<Vertex> with_swap(const std::vector<Vertex>& set, Vertex out, Vertex in) {
    std::vector<Vertex> next;
    next.reserve(set.size());
    for (Vertex v : set)
        if (v != out) next.push_back(v);
    next.insert(std::upper_bound(next.begin(), next.end(), in), in);
    return next;
}

} // namespace

StaticGraphInput parse_static_graph(const std::string& text) {
    StaticGraphInput input;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate 'p' header");
            if (toks.size() != 3 || toks[1] != "graph")
                throw ParseError(lineno, "malformed header, expected 'p graph <n>'");
            std::uint64_t n = parse_u64(toks[2], lineno, "n");
            if (n > 0xFFFFFFFFull) throw ParseError(lineno, "n too large");
            input.graph.n = static_cast<Vertex>(n);
            have_header = true;
        } else if (toks[0] == "e") {
            if (!have_header) throw ParseError(lineno, "edge line before 'p graph' header");
            if (toks.size() != 3)
                throw ParseError(lineno, "malformed edge line, expected 'e <u> <v>'");
            std::uint64_t u = parse_u64(toks[1], lineno, "u");
            std::uint64_t v = parse_u64(toks[2], lineno, "v");
            if (u >= input.graph.n || v >= input.graph.n)
                throw ParseError(lineno, "edge endpoint out of range");
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            input.graph.edges.push_back(
                make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
        } else if (toks[0] == "h") {
            if (!have_header) throw ParseError(lineno, "cycle line before 'p graph' header");
            if (input.cycle) throw ParseError(lineno, "duplicate 'h' cycle line");
            HamCycle c;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                std::uint64_t v = parse_u64(toks[i], lineno, "cycle vertex");
                if (v >= input.graph.n) throw ParseError(lineno, "cycle vertex out of range");
                c.order.push_back(static_cast<Vertex>(v));
            }
            input.cycle = std::move(c);
        } else {
            throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
        }
    }
    if (!have_header) throw ParseError(0, "missing 'p graph' header");
    std::sort(input.graph.edges.begin(), input.graph.edges.end());
    input.graph.edges.erase(std::unique(input.graph.edges.begin(), input.graph.edges.end()),
                            input.graph.edges.end());
    return input;
}

Instance gen_vc_to_msvc_ell0(const StaticGraph& g, std::uint64_t k) {
    auto edges = sorted_edges(g);
    if (edges.empty()) throw ContractError("gen_vc_to_msvc_ell0 needs at least one edge");
    Instance out;
    out.k = k;
    out.ell = 0;
    out.graph.n = g.n;
    for (const auto& e : edges) out.graph.layers.push_back(StaticGraph{g.n, {e}});
    return out;
}

Instance gen_vc_to_msvc_ell1(const StaticGraph& g, std::uint64_t k) {
    auto edges = sorted_edges(g);
    if (edges.empty()) throw ContractError("gen_vc_to_msvc_ell1 needs at least one edge");
    const std::uint64_t m = edges.size();
    const std::uint64_t tau = 2 * m;       // the construction parameter
    const std::uint64_t horizon = 2 * tau; // layers G_1 .. G_{2 tau}
    if (g.n + 2 * tau > 0xFFFFFFFFull) throw ContractError("instance too large");
    auto w = [&](std::uint64_t j) { // j in [1, 2 tau]
        return static_cast<Vertex>(g.n + j - 1);
    };
    Instance out;
    out.k = k + 1;
    out.ell = 1;
    out.graph.n = static_cast<Vertex>(g.n + 2 * tau);
    out.graph.layers.assign(horizon, StaticGraph{out.graph.n, {}});
    for (std::uint64_t i = 1; i <= tau; ++i) {
        // Odd layers cycle through the m distinct edges to fill all tau = 2m slots.
        out.graph.layers[2 * i - 2].edges = {edges[(i - 1) % m]};
        out.graph.layers[2 * i - 1].edges = {make_edge(w(i), w(i + tau))};
    }
    return out;
}

Instance gen_hcvc_to_msvc(const StaticGraph& g, std::uint64_t k, const HamCycle& c) {
    auto edges = sorted_edges(g);
    const auto deg = g.degrees();
    for (Vertex v = 0; v < g.n; ++v)
        if (deg[v] != 3)
            throw ContractError("gen_hcvc_to_msvc needs a cubic graph; vertex " +
                                std::to_string(v) + " has degree " + std::to_string(deg[v]));
    if (c.order.size() != g.n)
        throw ContractError("Hamiltonian cycle must list every vertex exactly once");
    std::vector<char> seen(g.n, 0);
    for (Vertex v : c.order) {
        if (v >= g.n || seen[v])
            throw ContractError("Hamiltonian cycle must list every vertex exactly once");
        seen[v] = 1;
    }
    const std::size_t len = c.order.size();
    std::vector<Edge> cycle_edges(len);
    for (std::size_t i = 0; i < len; ++i) {
        Vertex a = c.order[i], b = c.order[(i + 1) % len];
        if (!g.has_edge(a, b))
            throw ContractError("cycle step {" + std::to_string(a) + "," + std::to_string(b) +
                                "} is not an edge of the graph");
        cycle_edges[i] = make_edge(a, b);
    }

    // Drop the lex-smallest cycle edge; what is left of the cycle is the
    // Hamiltonian path P, whose endpoints are that edge's endpoints.
    const Edge e = *std::min_element(cycle_edges.begin(), cycle_edges.end());
    std::vector<Edge> path_edges;
    for (const auto& ce : cycle_edges)
        if (ce != e) path_edges.push_back(ce);
    std::vector<Edge> rest;
    for (const auto& ge : edges)
        if (std::find(path_edges.begin(), path_edges.end(), ge) == path_edges.end())
            rest.push_back(ge);

    const Vertex z = g.n, zp = g.n + 1;
    const Vertex n_out = g.n + 2;
    StaticGraph layer1{n_out, path_edges};
    layer1.edges.push_back(make_edge(z, zp));
    layer1.edges.push_back(make_edge(z, e.first)); // endpoint of P with the smaller id
    finish_layer(layer1);

    StaticGraph layer2{n_out, rest};
    layer2.edges.push_back(make_edge(z, zp));
    for (Vertex rep : component_reps(g.n, rest)) layer2.edges.push_back(make_edge(z, rep));
    finish_layer(layer2);

    Instance out;
    out.k = k + 1;
    out.ell = 0;
    out.graph.n = n_out;
    out.graph.layers = {std::move(layer1), std::move(layer2)};
    return out;
}

std::pair<Instance, ConstructionParams> gen_clique_to_msvc(const StaticGraph& g,
                                                           std::uint64_t k) {
    if (k < 2) throw ContractError("gen_clique_to_msvc requires k >= 2");
    if (g.edges.empty()) throw ContractError("gen_clique_to_msvc needs at least one edge");
    const CliqueLayout ly(g, k);

    Instance out;
    out.k = ly.kp;
    out.ell = 2;
    out.graph.n = static_cast<Vertex>(ly.total);
    out.graph.layers.assign(ly.tau, StaticGraph{out.graph.n, {}});

    const std::uint64_t period = 2 * ly.m;
    for (std::uint64_t L = 1; L <= ly.tau; ++L) {
        StaticGraph& layer = out.graph.layers[L - 1];
        if (L % 2 == 1) {
            add_star(layer, ly.center(L), ly, ly.odd_center_block(L)); // rule (1)
            if (L >= 3) layer.edges.push_back(make_edge(ly.center(L - 1), ly.center(L)));
        } else {
            layer.edges.push_back(make_edge(ly.center(L), ly.center(L + 1))); // rule (4)
            const std::uint64_t q = L / 2;                                    // rule (5)
            const std::uint64_t i5 = (q - 1) % ly.m + 1;
            const Edge e = ly.edges[i5 - 1];
            layer.edges.push_back(make_edge(ly.center(L), ly.edge_vertex(i5)));
            layer.edges.push_back(make_edge(ly.center(L), e.first));
            layer.edges.push_back(make_edge(ly.center(L), e.second));
        }
        if ((L - 1) % period == 0) { // rule (2): L = 2mj + 1
            const std::uint64_t j = (L - 1) / period;
            for (std::uint64_t x = 1; x <= ly.K; ++x)
                add_star(layer, ly.u_vertex(j + 1, x), ly, ly.u_block(j + 1, x));
        }
        // rule (3): U^{j+1} -- U^{j+2} matchings for every phase containing L
        const std::uint64_t jhi =
            std::min(ly.kappa - 1, (L - 1) / period);
        const std::uint64_t jlo =
            L > period + 1 ? (L - period - 1 + period - 1) / period : 0;
        for (std::uint64_t j = jlo; j <= jhi; ++j)
            for (std::uint64_t x = 1; x <= ly.K; ++x)
                layer.edges.push_back(
                    make_edge(ly.u_vertex(j + 1, x), ly.u_vertex(j + 2, x)));
        finish_layer(layer);
    }
    return {std::move(out), ConstructionParams{ly.K, ly.kp, ly.kappa, ly.tau}};
}

CoverSequence clique_forward_solution(const StaticGraph& g, std::uint64_t k,
                                      const std::vector<Vertex>& clique) {
    if (clique.size() != k) throw ContractError("clique must have exactly k vertices");
    std::vector<Vertex> sorted_clique = clique;
    std::sort(sorted_clique.begin(), sorted_clique.end());
    if (std::adjacent_find(sorted_clique.begin(), sorted_clique.end()) != sorted_clique.end())
        throw ContractError("clique vertices must be distinct");
    for (std::size_t a = 0; a < sorted_clique.size(); ++a) {
        if (sorted_clique[a] >= g.n) throw ContractError("clique vertex out of range");
        for (std::size_t b = a + 1; b < sorted_clique.size(); ++b)
            if (!g.has_edge(sorted_clique[a], sorted_clique[b]))
                throw ContractError("vertices " + std::to_string(sorted_clique[a]) + " and " +
                                    std::to_string(sorted_clique[b]) + " are not adjacent");
    }

    const Instance inst = gen_clique_to_msvc(g, k).first;
    const CliqueLayout ly(g, k);

    std::vector<Vertex> base = sorted_clique; // V' and E' stay in every set
    for (std::size_t a = 0; a < sorted_clique.size(); ++a)
        for (std::size_t b = a + 1; b < sorted_clique.size(); ++b) {
            const Edge e = make_edge(sorted_clique[a], sorted_clique[b]);
            const auto it = std::lower_bound(ly.edges.begin(), ly.edges.end(), e);
            base.push_back(ly.edge_vertex(
                static_cast<std::uint64_t>(it - ly.edges.begin()) + 1));
        }

    std::vector<Vertex> cur = base;
    for (std::uint64_t x = 1; x <= ly.K; ++x) cur.push_back(ly.u_vertex(1, x));
    cur.push_back(ly.center(1));
    std::sort(cur.begin(), cur.end());

    CoverSequence seq;
    seq.sets.reserve(ly.tau);
    seq.sets.push_back(cur);
    for (std::uint64_t t = 1; t <= ly.kappa; ++t) {
        const std::uint64_t T = (t - 1) * 2 * ly.m;
        for (std::uint64_t i = 1; i <= 2 * ly.m; ++i) {
            std::vector<Vertex> next;
            if (i % 2 == 1) {
                // Jump the center two ahead when the clique covers the next
                // (even) layer on its own, freeing that step for a U-swap.
                next = with_swap(cur, ly.center(T + i), ly.center(T + i + 2));
                if (!covers_layer(inst.graph.layers[T + i], next))
                    next = with_swap(cur, ly.center(T + i), ly.center(T + i + 1));
            } else if (std::binary_search(cur.begin(), cur.end(), ly.center(T + i))) {
                next = with_swap(cur, ly.center(T + i), ly.center(T + i + 1));
            } else {
                // Center already advanced; trade one U^t vertex for its
                // U^{t+1} partner.
                std::uint64_t x = 0;
                for (std::uint64_t j = 1; j <= ly.K; ++j)
                    if (std::binary_search(cur.begin(), cur.end(), ly.u_vertex(t, j))) {
                        x = j;
                        break;
                    }
                if (x == 0)
                    throw ContractError("forward solution: no U^t vertex left to swap");
                next = with_swap(cur, ly.u_vertex(t, x), ly.u_vertex(t + 1, x));
            }
            seq.sets.push_back(next);
            cur = std::move(next);
        }
    }
    return seq;
}

Instance gen_tree_wrap(const Instance& inst) {
    const Vertex n = inst.graph.n;
    if (inst.k >= UINT64_MAX - 2) throw ContractError("budget too large");
    const std::uint64_t k2 = inst.k + 1;
    if (n + 1 + (k2 + 1) > 0xFFFFFFFFull) throw ContractError("instance too large");
    const Vertex x = n;
    Instance out;
    out.k = k2;
    out.ell = inst.ell;
    out.graph.n = static_cast<Vertex>(n + 1 + (k2 + 1));
    out.graph.layers.reserve(inst.graph.tau());
    for (const auto& layer : inst.graph.layers) {
        StaticGraph g{out.graph.n, layer.edges};
        for (std::uint64_t q = 0; q <= k2; ++q)
            g.edges.push_back(make_edge(x, static_cast<Vertex>(n + 1 + q)));
        for (Vertex rep : component_reps(n, layer.edges)) g.edges.push_back(make_edge(x, rep));
        finish_layer(g);
        out.graph.layers.push_back(std::move(g));
    }
    return out;
}

Instance gen_and_composition(const std::vector<Instance>& instances) {
    if (instances.empty()) throw ContractError("gen_and_composition needs at least one instance");
    const Vertex n = instances[0].graph.n;
    const std::uint64_t k = instances[0].k;
    if (k > UINT64_MAX / 2) throw ContractError("budget too large");
    for (const auto& inst : instances) {
        if (inst.graph.n != n) throw ContractError("instances must share the vertex set");
        if (inst.k != k) throw ContractError("instances must share k");
        if (inst.ell != 1) throw ContractError("instances must have ell = 1");
        for (std::size_t i = 0; i < inst.graph.tau(); ++i)
            if (inst.graph.layers[i].edges.size() != 1)
                throw ContractError("every layer must have exactly one edge");
    }
    Instance out;
    out.k = k;
    out.ell = 1;
    out.graph.n = n;
    for (std::size_t q = 0; q < instances.size(); ++q) {
        if (q > 0) {
            // 2k bridge layers: the left instance's last layer once, then
            // 2k-1 copies of the right instance's first layer.
            out.graph.layers.push_back(instances[q - 1].graph.layers.back());
            for (std::uint64_t r = 1; r < 2 * k; ++r)
                out.graph.layers.push_back(instances[q].graph.layers.front());
        }
        for (const auto& layer : instances[q].graph.layers) out.graph.layers.push_back(layer);
    }
    return out;
}

Instance gen_stack_layers(const std::vector<StaticGraph>& graphs, std::uint64_t k) {
    if (graphs.empty()) throw ContractError("gen_stack_layers needs at least one graph");
    if (k > UINT64_MAX / 2) throw ContractError("budget too large");
    const Vertex n = graphs[0].n;
    for (const auto& g : graphs)
        if (g.n != n) throw ContractError("graphs must share the vertex set");
    Instance out;
    out.k = k;
    out.ell = 2 * k;
    out.graph.n = n;
    for (const auto& g : graphs) {
        StaticGraph layer{n, sorted_edges(g)};
        out.graph.layers.push_back(std::move(layer));
    }
    return out;
}

TemporalGraph gen_random(std::uint64_t seed, Vertex n, std::size_t tau,
                         double edge_probability) {
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw ContractError("edge probability must be in [0, 1]");
    if (tau < 1) throw ContractError("tau must be at least 1");
    std::mt19937_64 rng(seed);
    const long double scaled = static_cast<long double>(edge_probability) * 18446744073709551616.0L;
    TemporalGraph g;
    g.n = n;
    g.layers.assign(tau, StaticGraph{n, {}});
    for (std::size_t t = 0; t < tau; ++t)
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                const std::uint64_t draw = rng();
                const bool present = edge_probability >= 1.0 ||
                                     static_cast<long double>(draw) < scaled;
                if (present) g.layers[t].edges.push_back({u, v});
            }
    return g;
}

} // namespace msvc
