#include "msvc/temporal_graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace msvc {
namespace {

// Splits into whitespace-separated tokens.
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

void sort_unique(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

} // namespace

bool StaticGraph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<std::uint32_t> StaticGraph::degrees() const {
    std::vector<std::uint32_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::uint64_t TemporalGraph::temporal_edge_count() const {
    std::uint64_t total = 0;
    for (const auto& layer : layers) total += layer.edges.size();
    return total;
}

Instance parse_instance(const std::string& text) {
    Instance inst;
    bool have_header = false;
    std::size_t tau = 0;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate 'p' header");
            if (toks.size() != 6 || toks[1] != "msvc")
                throw ParseError(lineno, "malformed header, expected 'p msvc <n> <tau> <k> <ell>'");
            std::uint64_t n = parse_u64(toks[2], lineno, "n");
            tau = parse_u64(toks[3], lineno, "tau");
            inst.k = parse_u64(toks[4], lineno, "k");
            inst.ell = parse_u64(toks[5], lineno, "ell");
            if (tau < 1) throw ParseError(lineno, "tau must be at least 1");
            if (n > 0xFFFFFFFFull) throw ParseError(lineno, "n too large");
            inst.graph.n = static_cast<Vertex>(n);
            inst.graph.layers.assign(tau, StaticGraph{inst.graph.n, {}});
            have_header = true;
        } else if (toks[0] == "e") {
            if (!have_header) throw ParseError(lineno, "edge line before 'p msvc' header");
            if (toks.size() != 4)
                throw ParseError(lineno, "malformed edge line, expected 'e <t> <u> <v>'");
            std::uint64_t t = parse_u64(toks[1], lineno, "t");
            std::uint64_t u = parse_u64(toks[2], lineno, "u");
            std::uint64_t v = parse_u64(toks[3], lineno, "v");
            if (t < 1 || t > tau)
                throw ParseError(lineno, "time index " + std::to_string(t) +
                                             " outside [1, " + std::to_string(tau) + "]");
            if (u >= inst.graph.n || v >= inst.graph.n)
                throw ParseError(lineno, "edge endpoint out of range [0, " +
                                             std::to_string(inst.graph.n) + ")");
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            inst.graph.layers[t - 1].edges.push_back(
                make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
        } else {
            throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
        }
    }
    if (!have_header) throw ParseError(0, "missing 'p msvc' header");
    for (auto& layer : inst.graph.layers) sort_unique(layer.edges);
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "p msvc " << inst.graph.n << ' ' << inst.graph.tau() << ' ' << inst.k << ' '
        << inst.ell << '\n';
    for (std::size_t t = 0; t < inst.graph.tau(); ++t)
        for (const auto& [u, v] : inst.graph.layers[t].edges)
            out << "e " << (t + 1) << ' ' << u << ' ' << v << '\n';
    return out.str();
}

CoverSequence parse_solution(const std::string& text) {
    CoverSequence seq;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] != "s")
            throw ParseError(lineno, "unknown line type '" + toks[0] + "' in solution");
        if (toks.size() < 2) throw ParseError(lineno, "malformed solution line, expected 's <t> <v...>'");
        std::uint64_t t = parse_u64(toks[1], lineno, "t");
        if (t != seq.sets.size() + 1)
            throw ParseError(lineno, "solution lines must be consecutive starting at t=1, got t=" +
                                         std::to_string(t));
        std::vector<Vertex> set;
        for (std::size_t i = 2; i < toks.size(); ++i) {
            std::uint64_t v = parse_u64(toks[i], lineno, "vertex");
            if (v > 0xFFFFFFFFull) throw ParseError(lineno, "vertex id too large");
            set.push_back(static_cast<Vertex>(v));
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        seq.sets.push_back(std::move(set));
    }
    return seq;
}

std::string serialize_solution(const CoverSequence& seq) {
    std::ostringstream out;
    for (std::size_t t = 0; t < seq.sets.size(); ++t) {
        out << "s " << (t + 1);
        for (Vertex v : seq.sets[t]) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

StaticGraph underlying_graph(const TemporalGraph& g) {
    StaticGraph out{g.n, {}};
    for (const auto& layer : g.layers)
        out.edges.insert(out.edges.end(), layer.edges.begin(), layer.edges.end());
    sort_unique(out.edges);
    return out;
}

std::string violation_to_string(const Violation& v) {
    switch (v.kind) {
    case ViolationKind::UncoveredEdge:
        return "layer " + std::to_string(v.index + 1) + ": uncovered-edge " +
               std::to_string(v.a) + " " + std::to_string(v.b);
    case ViolationKind::SizeExceeded:
        return "layer " + std::to_string(v.index + 1) + ": size-exceeded " +
               std::to_string(v.a) + " > k=" + std::to_string(v.b);
    case ViolationKind::DiffExceeded:
        return "transition " + std::to_string(v.index + 1) + ": diff-exceeded " +
               std::to_string(v.a) + " > ell=" + std::to_string(v.b);
    case ViolationKind::LengthMismatch:
        return "length-mismatch " + std::to_string(v.a) + " != tau=" + std::to_string(v.b);
    }
    return "unknown violation";
}

VerificationReport verify_solution(const Instance& inst, const CoverSequence& seq) {
    VerificationReport report;
    const std::size_t tau = inst.graph.tau();
    if (seq.sets.size() != tau)
        report.violations.push_back(
            {ViolationKind::LengthMismatch, 0, seq.sets.size(), tau});

    // Normalized copies; callers may hand in unsorted sets.
    const std::size_t upto = std::min(seq.sets.size(), tau);
    std::vector<std::vector<Vertex>> sets(seq.sets.begin(), seq.sets.begin() + upto);
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    auto contains = [](const std::vector<Vertex>& s, Vertex v) {
        return std::binary_search(s.begin(), s.end(), v);
    };
    for (std::size_t i = 0; i < upto; ++i) {
        for (const auto& [u, v] : inst.graph.layers[i].edges)
            if (!contains(sets[i], u) && !contains(sets[i], v))
                report.violations.push_back({ViolationKind::UncoveredEdge, i, u, v});
        if (sets[i].size() > inst.k)
            report.violations.push_back({ViolationKind::SizeExceeded, i, sets[i].size(), inst.k});
    }
    for (std::size_t i = 0; i + 1 < upto; ++i) {
        std::vector<Vertex> diff;
        std::set_symmetric_difference(sets[i].begin(), sets[i].end(), sets[i + 1].begin(),
                                      sets[i + 1].end(), std::back_inserter(diff));
        if (diff.size() > inst.ell)
            report.violations.push_back({ViolationKind::DiffExceeded, i, diff.size(), inst.ell});
    }
    report.valid = report.violations.empty();
    return report;
}

} // namespace msvc
