// Command-line front end: presolve -> kernelize -> configuration-graph solve,
// plus generation, verification, oracle and kernelization commands.
//
// Exit codes: 0 decided (answer on stdout), 1 verification failed,
// 2 input error, 3 resource budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "msvc/config_solver.hpp"
#include "msvc/generators.hpp"
#include "msvc/kernelization.hpp"
#include "msvc/oracle.hpp"
#include "msvc/presolve.hpp"
#include "msvc/static_vc.hpp"
#include "msvc/temporal_graph.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw msvc::ParseError(0, "cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw msvc::ParseError(0, "cannot write file '" + path + "'");
    out << content;
}

json sequence_to_json(const msvc::CoverSequence& seq) {
    json out = json::array();
    for (const auto& set : seq.sets) out.push_back(set);
    return out;
}

struct SolveArgs {
    std::string instance_path;
    bool no_kernel = false;
    bool minimal = false;
    std::uint64_t node_budget = 5'000'000;
    unsigned threads = 1;
    std::string emit_solution;
    std::string format = "text";
};

int run_solve(const SolveArgs& args) {
    using namespace msvc;
    const Instance inst = parse_instance(read_file(args.instance_path));
    const config::NodeBudget budget{args.node_budget};

    std::optional<CoverSequence> witness;
    std::string engine;
    if (args.minimal) {
        witness = config::solve_minimal(inst, budget, args.threads);
        engine = "config-minimal";
    } else {
        PresolveOutcome pre = presolve(inst);
        if (pre.kind == PresolveKind::DecidedYes) {
            witness = std::move(pre.witness);
            engine = "presolve";
        } else if (pre.kind == PresolveKind::DecidedNo) {
            engine = "presolve";
        } else if (args.no_kernel) {
            witness = config::solve(inst, budget, args.threads);
            engine = "config";
        } else {
            KernelResult kr = kernelize(inst);
            engine = "kernel+config";
            if (kr.verdict != KernelVerdict::DecidedNo) {
                auto reduced_witness = config::solve(kr.reduced, budget, args.threads);
                if (reduced_witness) witness = lift_solution(kr, *reduced_witness);
            }
        }
    }

    if (witness) {
        auto report = verify_solution(inst, *witness);
        if (!report.valid)
            throw std::logic_error("internal error: solver witness failed verification: " +
                                   violation_to_string(report.violations.front()));
    }

    if (args.format == "json") {
        json out;
        out["command"] = "solve";
        out["answer"] = witness ? "YES" : "NO";
        out["engine"] = engine;
        out["solution"] = witness ? sequence_to_json(*witness) : json(nullptr);
        std::cout << out.dump() << '\n';
    } else {
        std::cout << (witness ? "YES" : "NO") << '\n';
    }
    if (witness && !args.emit_solution.empty())
        write_file(args.emit_solution, serialize_solution(*witness));
    return kExitOk;
}

struct KernelizeArgs {
    std::string instance_path;
    bool one_edge = false;
    std::string emit_replay;
    std::string format = "text";
};

int run_kernelize(const KernelizeArgs& args) {
    using namespace msvc;
    const Instance inst = parse_instance(read_file(args.instance_path));
    const KernelResult res = args.one_edge ? kernelize_one_edge(inst) : kernelize(inst);

    const std::size_t tau = inst.graph.tau();
    if (res.verdict == KernelVerdict::Open) {
        // Size guarantees checked before anything is emitted.
        const std::uint64_t kk = inst.k > 0xFFFFFFFFull ? UINT64_MAX : inst.k * inst.k;
        const std::uint64_t vertex_bound = args.one_edge ? 2 * tau : 2 * kk * tau;
        const std::uint64_t edge_bound = args.one_edge ? tau : kk * tau;
        if (res.reduced.graph.n > vertex_bound ||
            res.reduced.graph.temporal_edge_count() > edge_bound)
            throw std::logic_error("internal error: kernel exceeds its size bound");
    }

    std::string verdict = res.verdict == KernelVerdict::Open ? "open"
                          : res.verdict == KernelVerdict::DecidedYes ? "yes"
                                                                     : "no";
    if (args.format == "json") {
        json out;
        out["command"] = "kernelize";
        out["verdict"] = verdict;
        out["instance"] = serialize_instance(res.reduced);
        out["replay"] = serialize_replay(res);
        out["deleted"] = res.deleted.size();
        out["rewrites"] = res.rewrites.size();
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "c verdict " << verdict << '\n';
        std::cout << serialize_instance(res.reduced);
    }
    if (!args.emit_replay.empty()) write_file(args.emit_replay, serialize_replay(res));
    return kExitOk;
}

struct VerifyArgs {
    std::string instance_path;
    std::string solution_path;
    std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
    using namespace msvc;
    const Instance inst = parse_instance(read_file(args.instance_path));
    const CoverSequence seq = parse_solution(read_file(args.solution_path));
    for (const auto& set : seq.sets)
        for (Vertex v : set)
            if (v >= inst.graph.n)
                throw ParseError(0, "solution vertex " + std::to_string(v) +
                                        " out of range [0, " + std::to_string(inst.graph.n) + ")");
    const VerificationReport report = verify_solution(inst, seq);
    if (args.format == "json") {
        json out;
        out["command"] = "verify";
        out["valid"] = report.valid;
        json violations = json::array();
        for (const auto& v : report.violations) violations.push_back(violation_to_string(v));
        out["violations"] = violations;
        std::cout << out.dump() << '\n';
    } else if (report.valid) {
        std::cout << "VALID\n";
    } else {
        for (const auto& v : report.violations) std::cout << violation_to_string(v) << '\n';
    }
    return report.valid ? kExitOk : kExitInvalid;
}

struct OracleArgs {
    std::string instance_path;
    std::uint64_t work_budget = 10'000'000;
    std::string format = "text";
};

int run_oracle(const OracleArgs& args) {
    using namespace msvc;
    const Instance inst = parse_instance(read_file(args.instance_path));
    auto witness = oracle_solve(inst, args.work_budget);
    if (args.format == "json") {
        json out;
        out["command"] = "oracle";
        out["answer"] = witness ? "YES" : "NO";
        out["solution"] = witness ? sequence_to_json(*witness) : json(nullptr);
        std::cout << out.dump() << '\n';
    } else {
        std::cout << (witness ? "YES" : "NO") << '\n';
    }
    return kExitOk;
}

struct GenerateArgs {
    std::string family;
    std::vector<std::string> inputs;
    std::uint64_t k = 1;
    std::uint64_t ell = 0;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
    std::uint64_t tau = 1;
    double p = 0.5;
    std::string output;
    std::string format = "text";
};

int run_generate(const GenerateArgs& args) {
    using namespace msvc;
    Instance inst;
    std::optional<ConstructionParams> params;

    auto load_graph = [&](const std::string& path) {
        return parse_static_graph(read_file(path));
    };

    if (args.family == "vc0") {
        inst = gen_vc_to_msvc_ell0(load_graph(args.inputs.at(0)).graph, args.k);
    } else if (args.family == "vc1") {
        inst = gen_vc_to_msvc_ell1(load_graph(args.inputs.at(0)).graph, args.k);
    } else if (args.family == "hcvc") {
        auto in = load_graph(args.inputs.at(0));
        if (!in.cycle)
            throw ParseError(0, "hcvc input needs a Hamiltonian cycle 'h' line");
        inst = gen_hcvc_to_msvc(in.graph, args.k, *in.cycle);
    } else if (args.family == "clique") {
        auto [built, pr] = gen_clique_to_msvc(load_graph(args.inputs.at(0)).graph, args.k);
        inst = std::move(built);
        params = pr;
    } else if (args.family == "treewrap") {
        inst = gen_tree_wrap(parse_instance(read_file(args.inputs.at(0))));
    } else if (args.family == "andcomp") {
        std::vector<Instance> parts;
        for (const auto& path : args.inputs) parts.push_back(parse_instance(read_file(path)));
        inst = gen_and_composition(parts);
    } else if (args.family == "stack") {
        std::vector<StaticGraph> graphs;
        for (const auto& path : args.inputs) graphs.push_back(load_graph(path).graph);
        inst = gen_stack_layers(graphs, args.k);
    } else if (args.family == "random") {
        if (args.n > 0xFFFFFFFFull) throw ParseError(0, "n too large");
        inst.graph = gen_random(args.seed, static_cast<Vertex>(args.n), args.tau, args.p);
        inst.k = args.k;
        inst.ell = args.ell;
    } else {
        throw ParseError(0, "unknown family '" + args.family + "'");
    }

    std::ostringstream text;
    if (params)
        text << "c params K=" << params->K << " kprime=" << params->k_prime
             << " kappa=" << params->kappa << " tau=" << params->tau << '\n';
    text << serialize_instance(inst);

    if (args.format == "json") {
        json out;
        out["command"] = "generate";
        out["family"] = args.family;
        out["instance"] = serialize_instance(inst);
        if (params)
            out["params"] = {{"K", params->K},
                             {"kprime", params->k_prime},
                             {"kappa", params->kappa},
                             {"tau", params->tau}};
        if (args.output.empty())
            std::cout << out.dump() << '\n';
        else
            write_file(args.output, out.dump() + "\n");
    } else if (args.output.empty()) {
        std::cout << text.str();
    } else {
        write_file(args.output, text.str());
    }
    return kExitOk;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver toolkit for Multistage Vertex Cover on temporal graphs"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Decide an instance and emit a witness");
    solve->add_option("instance", solve_args.instance_path, "Instance file")->required();
    solve->add_flag("--no-kernel", solve_args.no_kernel, "Skip kernelization");
    solve->add_flag("--minimal", solve_args.minimal,
                    "Minimal MSVC: every set must be an inclusion-minimal cover");
    solve->add_option("--node-budget", solve_args.node_budget,
                      "Configuration-graph node budget")
        ->envname("MSVC_NODE_BUDGET");
    solve->add_option("--threads", solve_args.threads, "Layer-construction threads");
    solve->add_option("--emit-solution", solve_args.emit_solution,
                      "Write the verified solution to this path");
    add_format_flag(solve, solve_args.format);

    KernelizeArgs kernel_args;
    auto* kern = app.add_subcommand("kernelize", "Reduce an instance");
    kern->add_option("instance", kernel_args.instance_path, "Instance file")->required();
    kern->add_flag("--one-edge", kernel_args.one_edge,
                   "Use the one-edge-layer kernel (requires one edge per layer)");
    kern->add_option("--emit-replay", kernel_args.emit_replay,
                     "Write the replay log to this path");
    add_format_flag(kern, kernel_args.format);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Verify a solution file");
    verify->add_option("instance", verify_args.instance_path, "Instance file")->required();
    verify->add_option("solution", verify_args.solution_path, "Solution file")->required();
    add_format_flag(verify, verify_args.format);

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
    oracle->add_option("instance", oracle_args.instance_path, "Instance file")->required();
    oracle->add_option("--work-budget", oracle_args.work_budget, "State/transition budget");
    add_format_flag(oracle, oracle_args.format);

    GenerateArgs gen_args;
    auto* gen = app.add_subcommand("generate", "Instance generators");
    gen->add_option("family", gen_args.family,
                    "One of: vc0 vc1 hcvc clique andcomp stack random treewrap")
        ->required()
        ->check(CLI::IsMember(
            {"vc0", "vc1", "hcvc", "clique", "andcomp", "stack", "random", "treewrap"}));
    gen->add_option("inputs", gen_args.inputs, "Input graph/instance files");
    gen->add_option("-k,--k", gen_args.k, "Budget parameter");
    gen->add_option("--ell", gen_args.ell, "Symmetric-difference budget (random family)");
    gen->add_option("--seed", gen_args.seed, "Random seed");
    gen->add_option("--n", gen_args.n, "Vertex count (random family)");
    gen->add_option("--tau", gen_args.tau, "Layer count (random family)");
    gen->add_option("--p", gen_args.p, "Edge probability (random family)");
    gen->add_option("-o,--output", gen_args.output, "Write the instance to this path");
    add_format_flag(gen, gen_args.format);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return run_solve(solve_args);
        if (*kern) return run_kernelize(kernel_args);
        if (*verify) return run_verify(verify_args);
        if (*oracle) return run_oracle(oracle_args);
        if (*gen) return run_generate(gen_args);
    } catch (const msvc::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const msvc::ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const msvc::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::out_of_range&) {
        std::cerr << "error: missing input file argument\n";
        return kExitInputError;
    }
    return kExitInputError;
}
