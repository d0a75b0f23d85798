#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vcr/fpt.hpp"
#include "vcr/generators.hpp"
#include "vcr/polysolve.hpp"
#include "vcr/reductions.hpp"
#include "vcr/suites.hpp"

namespace {

using namespace vcr;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitBudget = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// SET|@FILE and SEQ|@FILE arguments.
std::string inline_or_file(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
    return arg;
}

VertexSet parse_set_arg(const std::string& arg) { return parse_vertex_set(inline_or_file(arg)); }

EditSequence parse_seq_arg(const std::string& arg) {
    return parse_edit_sequence(inline_or_file(arg));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file '" + path + "'");
    out << content;
}

void print_outcome(const SolveOutcome& out, const std::string& algo) {
    if (out.yes) {
        std::cout << "answer=YES length=" << *out.length << " cap=" << *out.cap
                  << " algo=" << algo << "\n";
        std::cout << "witness=" << format_edit_sequence(*out.witness) << "\n";
    } else {
        std::cout << "answer=NO algo=" << algo << " reason=" << out.reason << "\n";
    }
}

struct SolveArgs {
    std::string graph_file;
    std::string s_arg, t_arg;
    int k = 0;
    int l = -1;
    std::string algo = "auto";
    std::uint64_t budget = 500'000'000;
    int d_flag = 0;
};

int run_solve(const SolveArgs& args) {
    Graph g = load_graph_file(args.graph_file);
    VertexCover s(g, parse_set_arg(args.s_arg));
    VertexCover t(g, parse_set_arg(args.t_arg));
    std::optional<int> l;
    if (args.l >= 0) l = args.l;
    ReconfigInstance inst(g, s, t, args.k, l);

    std::string algo = args.algo;
    if (algo == "auto") {
        GraphClass c = classify(g);
        if (c.forest)
            algo = "tree";
        else if (c.cactus)
            algo = "cactus";
        else if (l)
            algo = "fpt";
        else
            algo = "oracle";
    }

    SolveOutcome out;
    if (algo == "tree")
        out = solve_tree(inst);
    else if (algo == "cactus")
        out = solve_cactus(inst);
    else if (algo == "fpt") {
        if (!l) throw ParseError("the FPT solver needs a length bound -l");
        Budget budget{args.budget, 0};
        out = solve_fpt(inst, budget,
                        args.d_flag > 0 ? std::optional<int>(args.d_flag) : std::nullopt);
    } else if (algo == "oracle")
        out = oracle::bfs_shortest(inst);
    else
        throw ParseError("unknown algorithm '" + algo + "'");

    // The shortest-length solvers ignore l; apply the bound afterwards.
    if (out.yes && l && *out.length > *l && algo != "fpt") {
        std::cout << "answer=NO algo=" << algo << " reason=shortest length " << *out.length
                  << " exceeds l=" << *l << "\n";
        return kExitNo;
    }
    if (out.yes) {
        // Never trust a solver without re-tracing its witness.
        TraceResult tr = trace(g, s, *out.witness);
        if (!tr.valid || tr.final_set != t.members() || tr.cap > args.k)
            throw InvariantError("witness failed re-verification");
    }
    print_outcome(out, algo);
    return out.yes ? kExitYes : kExitNo;
}

int run_check(const std::string& what, const std::string& graph_file, const std::string& s_arg,
              const std::string& seq_arg, int k, int d) {
    Graph g = load_graph_file(graph_file);
    if (what == "cactus") {
        GraphClass c = classify(g);
        std::cout << "cactus=" << (c.cactus ? "true" : "false")
                  << " tree=" << (c.tree ? "true" : "false")
                  << " forest=" << (c.forest ? "true" : "false")
                  << " bipartite=" << (c.bipartite ? "true" : "false")
                  << " max_degree=" << c.max_degree << "\n";
        return c.cactus ? kExitYes : kExitNo;
    }
    if (s_arg.empty()) throw ParseError("check " + what + " needs -s");
    VertexSet sset = parse_set_arg(s_arg);
    if (what == "cover") {
        bool ok = is_vertex_cover(g, sset);
        std::cout << "cover=" << (ok ? "true" : "false") << "\n";
        return ok ? kExitYes : kExitNo;
    }
    VertexCover s(g, sset);
    EditSequence q = parse_seq_arg(seq_arg);
    if (what == "valid") {
        TraceResult tr = trace(g, s, q);
        std::cout << "valid=" << (tr.valid ? "true" : "false");
        if (!tr.valid) std::cout << " failure_position=" << *tr.failure_position;
        std::cout << "\n";
        return tr.valid ? kExitYes : kExitNo;
    }
    if (what == "tight") {
        TraceResult tr = trace(g, s, q);
        bool tight = tr.valid && tr.cap <= k && s.size() <= k;
        std::cout << "tight=" << (tight ? "true" : "false");
        if (tr.valid) std::cout << " cap=" << std::max(tr.cap, s.size());
        std::cout << "\n";
        return tight ? kExitYes : kExitNo;
    }
    if (what == "nice") {
        int bound = d > 0 ? d : std::max(1, g.max_degree());
        NiceCheck nc = check_nice(g, s, q, bound);
        std::cout << "nice=" << (nc.nice ? "true" : "false");
        if (!nc.nice) std::cout << " reason=" << nc.reason;
        std::cout << "\n";
        return nc.nice ? kExitYes : kExitNo;
    }
    throw ParseError("unknown check '" + what + "'");
}

int run_convert_nice(const std::string& graph_file, const std::string& s_arg,
                     const std::string& seq_arg) {
    Graph g = load_graph_file(graph_file);
    VertexCover s(g, parse_set_arg(s_arg));
    EditSequence a = parse_seq_arg(seq_arg);
    TraceResult tr = trace(g, s, a);
    if (!tr.valid)
        throw InvariantError("input sequence is invalid at position " +
                             std::to_string(*tr.failure_position));
    VertexCover t(g, tr.final_set);
    EditSequence out = convert_to_nice(g, s, t, a);
    std::cout << "nice=" << format_edit_sequence(out) << "\n";
    std::cout << "target=" << format_vertex_set(t.members()) << "\n";
    return kExitYes;
}

int run_oracle_stats(const std::string& graph_file, int k) {
    Graph g = load_graph_file(graph_file);
    ReconfigGraphStats st = oracle::stats(g, k);
    std::cout << "nodes=" << st.node_count << " edges=" << st.edge_count
              << " diameter=" << st.diameter << "\n";
    return kExitYes;
}

void emit_instance(const ReconfigInstance& inst, const std::string& prefix) {
    write_file(prefix + ".graph", format_graph(inst.g));
    write_file(prefix + ".source", format_vertex_set(inst.s.members()) + "\n");
    write_file(prefix + ".target", format_vertex_set(inst.t.members()) + "\n");
    write_file(prefix + ".manifest",
               "k=" + std::to_string(inst.k) + " l=" + std::to_string(inst.l.value_or(0)) + "\n");
}

int run_reduce(const std::string& kind, const std::string& graph_file, const std::string& s_arg,
               int k, int t, int d, int f_k, const std::string& out_prefix) {
    Graph g = load_graph_file(graph_file);
    if (kind == "clique-bcc") {
        BccInstance bcc = reduce_clique_to_bcc(g, k);
        std::cout << "vertices=" << bcc.graph.vertex_count() << " k=" << bcc.k << " d=" << bcc.d
                  << "\n";
        if (!out_prefix.empty()) {
            write_file(out_prefix + ".graph", format_graph(bcc.graph));
            write_file(out_prefix + ".sidea", format_vertex_set(bcc.side_a) + "\n");
            write_file(out_prefix + ".sideb", format_vertex_set(bcc.side_b) + "\n");
            write_file(out_prefix + ".manifest",
                       "k=" + std::to_string(bcc.k) + " d=" + std::to_string(bcc.d) + "\n");
        }
        return kExitYes;
    }
    if (kind == "bcc-vcr") {
        if (!classify(g).bipartite) throw InvariantError("bcc-vcr needs a bipartite graph");
        // Sides from a BFS 2-coloring, the lowest vertex of each component on
        // side A.
        VertexSet all;
        for (int v = 1; v <= g.vertex_count(); ++v) all.push_back(v);
        VertexSet side_a, side_b;
        for (const VertexSet& comp : connected_components(g, all)) {
            std::vector<int> color(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
            std::vector<int> queue{comp.front()};
            color[static_cast<std::size_t>(comp.front())] = 0;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (int u : g.neighbors(queue[i]))
                    if (color[static_cast<std::size_t>(u)] == -1) {
                        color[static_cast<std::size_t>(u)] =
                            1 - color[static_cast<std::size_t>(queue[i])];
                        queue.push_back(u);
                    }
            for (int v : comp)
                (color[static_cast<std::size_t>(v)] == 0 ? side_a : side_b).push_back(v);
        }
        side_a = make_set(std::move(side_a));
        side_b = make_set(std::move(side_b));
        BccVcrReduction red = reduce_bcc_to_vcr(g, side_a, side_b, t, d);
        std::cout << "vertices=" << red.instance.g.vertex_count() << " k=" << red.instance.k
                  << " l=" << *red.instance.l << "\n";
        if (!out_prefix.empty()) emit_instance(red.instance, out_prefix);
        return kExitYes;
    }
    if (kind == "compression-vcr" || kind == "compression-vcr-4reg") {
        VertexCover c(g, parse_set_arg(s_arg));
        (void)k;
        if (kind == "compression-vcr") {
            CompressionVcrReduction red = reduce_compression_to_vcr(g, c, c.size());
            std::cout << "vertices=" << red.instance.g.vertex_count() << " k=" << red.instance.k
                      << " l=" << *red.instance.l << "\n";
            if (!out_prefix.empty()) emit_instance(red.instance, out_prefix);
        } else {
            FourRegularReduction red = reduce_compression_to_vcr_4regular(
                g, c, c.size(), f_k > 0 ? std::optional<int>(f_k) : std::nullopt);
            std::cout << "vertices=" << red.instance.g.vertex_count() << " k=" << red.instance.k
                      << " l=" << *red.instance.l << " f_k=" << red.f_k << "\n";
            if (!out_prefix.empty()) emit_instance(red.instance, out_prefix);
        }
        return kExitYes;
    }
    throw ParseError("unknown reduction '" + kind + "'");
}

int run_gadget(const std::string& kind, int k, bool verify, const std::string& out_prefix) {
    if (kind != "wk") throw ParseError("unknown gadget '" + kind + "'");
    NecklaceGadget w = build_wk(k);
    std::cout << "vertices=" << w.graph().vertex_count() << " regular=4 covers="
              << w.s_cover().size() << "/" << w.t_cover().size();
    if (verify) {
        bool minimal = removable_vertices(w.graph(), w.s_cover().members()).empty() &&
                       removable_vertices(w.graph(), w.t_cover().members()).empty();
        EditSequence seq = wk_witness_sequence(w);
        TraceResult tr = trace(w.graph(), w.s_cover(), seq);
        bool witness_ok = tr.valid && tr.final_set == w.t_cover().members() &&
                          seq.size() == w.graph().vertex_count() &&
                          tr.cap <= 3 * k * k + k + 3;
        std::cout << " covers=ok minimal=" << (minimal ? "ok" : "VIOLATED")
                  << " witness=" << (witness_ok ? "ok" : "VIOLATED")
                  << " witness_cap=" << tr.cap;
        if (!minimal || !witness_ok) {
            std::cout << "\n";
            return kExitNo;
        }
    }
    std::cout << "\n";
    if (!out_prefix.empty()) {
        write_file(out_prefix + ".graph", format_graph(w.graph()));
        write_file(out_prefix + ".source", format_vertex_set(w.s_cover().members()) + "\n");
        write_file(out_prefix + ".target", format_vertex_set(w.t_cover().members()) + "\n");
        write_file(out_prefix + ".witness", format_edit_sequence(wk_witness_sequence(w)) + "\n");
    }
    return kExitYes;
}

int run_gen(const std::string& family, int n, int degree, int cycles, std::uint64_t seed,
            const std::string& out_file) {
    GenSpec spec;
    spec.family = parse_family(family);
    spec.n = n;
    if (degree > 0) spec.degree_bound = degree;
    if (cycles >= 0) spec.cycle_count = cycles;
    spec.seed = seed;
    Graph g = gen_graph(spec);
    std::string text = format_graph(g);
    if (out_file.empty())
        std::cout << text;
    else
        write_file(out_file, text);
    return kExitYes;
}

int run_suite(const std::string& name, std::uint64_t seed, double scale, std::uint64_t budget) {
    suite::SuiteOptions opt;
    opt.seed = seed;
    opt.scale = scale;
    opt.budget = budget;
    if (name == "all") return suite::run_all(opt, std::cout) ? kExitYes : kExitNo;
    suite::SuiteResult r = suite::run_suite(name, opt);
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << " ("
              << r.seconds << "s)\n";
    return r.pass ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex cover reconfiguration toolkit"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "decide reconfigurability, shortest-length aware");
    solve->add_option("-g,--graph", solve_args.graph_file, "graph file")->required();
    solve->add_option("-s,--source", solve_args.s_arg, "source cover (ids or @file)")->required();
    solve->add_option("-t,--target", solve_args.t_arg, "target cover (ids or @file)")->required();
    solve->add_option("-k,--capacity", solve_args.k, "maximum cover size")->required();
    solve->add_option("-l,--length", solve_args.l, "length bound");
    solve->add_option("--algo", solve_args.algo, "auto|tree|cactus|fpt|oracle");
    solve->add_option("--budget", solve_args.budget, "work ceiling for the FPT solver");
    solve->add_option("-d,--degree", solve_args.d_flag, "raise the degree bound for FPT");

    std::string check_what, check_graph, check_s, check_q;
    int check_k = 0, check_d = 0;
    auto* check = app.add_subcommand("check", "cover/valid/tight/nice/cactus predicates");
    check->add_option("what", check_what, "cover|valid|tight|nice|cactus")->required();
    check->add_option("-g,--graph", check_graph, "graph file")->required();
    check->add_option("-s,--source", check_s, "vertex set (ids or @file)");
    check->add_option("-q,--sequence", check_q, "edit sequence (tokens or @file)");
    check->add_option("-k,--capacity", check_k, "capacity for tightness");
    check->add_option("-d,--degree", check_d, "degree bound for niceness");

    std::string cn_graph, cn_s, cn_q;
    auto* cn = app.add_subcommand("convert-nice", "normalize a valid sequence");
    cn->add_option("-g,--graph", cn_graph, "graph file")->required();
    cn->add_option("-s,--source", cn_s, "source cover")->required();
    cn->add_option("-q,--sequence", cn_q, "edit sequence")->required();

    std::string os_graph;
    int os_k = 0;
    auto* ostats = app.add_subcommand("oracle-stats", "reconfiguration graph statistics");
    ostats->add_option("-g,--graph", os_graph, "graph file")->required();
    ostats->add_option("-k,--capacity", os_k, "maximum cover size")->required();

    std::string red_kind, red_graph, red_s, red_prefix;
    int red_k = 2, red_t = 1, red_d = 1, red_fk = 0;
    auto* reduce = app.add_subcommand("reduce", "hardness reduction generators");
    reduce->add_option("kind", red_kind, "clique-bcc|bcc-vcr|compression-vcr|compression-vcr-4reg")
        ->required();
    reduce->add_option("-g,--graph", red_graph, "graph file")->required();
    reduce->add_option("-s,--source", red_s, "cover for the compression reductions");
    reduce->add_option("-k,--clique", red_k, "clique size for clique-bcc");
    reduce->add_option("-t,--head", red_t, "crown head bound for bcc-vcr");
    reduce->add_option("-d,--slack", red_d, "crown slack for bcc-vcr");
    reduce->add_option("--fk", red_fk, "f(k) override for the 4-regular reduction");
    reduce->add_option("-o,--out", red_prefix, "output file prefix");

    std::string gadget_kind;
    int gadget_k = 4;
    bool gadget_verify = false;
    std::string gadget_prefix;
    auto* gadget = app.add_subcommand("gadget", "necklace gadget construction");
    gadget->add_option("kind", gadget_kind, "wk")->required();
    gadget->add_option("-k", gadget_k, "necklace parameter (>= 4)")->required();
    gadget->add_flag("--verify", gadget_verify, "verify structure and witness");
    gadget->add_option("-o,--out", gadget_prefix, "output file prefix");

    std::string gen_family = "tree", gen_out;
    int gen_n = 10, gen_degree = 0, gen_cycles = -1;
    std::uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "seeded random instance generator");
    gen->add_option("--family", gen_family, "tree|cactus|bounded_degree|bipartite")->required();
    gen->add_option("-n", gen_n, "vertex count")->required();
    gen->add_option("-d,--degree", gen_degree, "degree bound");
    gen->add_option("--cycles", gen_cycles, "cactus cycle count");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    std::string suite_name = "all";
    std::uint64_t suite_seed = 20240801, suite_budget = 100'000'000;
    double suite_scale = 1.0;
    auto* suite_cmd = app.add_subcommand("suite", "acceptance suites");
    suite_cmd->add_option("--name", suite_name, "suite name or 'all'");
    suite_cmd->add_option("--seed", suite_seed, "random seed (printed)");
    suite_cmd->add_option("--scale", suite_scale, "instance count multiplier");
    suite_cmd->add_option("--budget", suite_budget, "FPT work ceiling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (check->parsed())
            return run_check(check_what, check_graph, check_s, check_q, check_k, check_d);
        if (cn->parsed()) return run_convert_nice(cn_graph, cn_s, cn_q);
        if (ostats->parsed()) return run_oracle_stats(os_graph, os_k);
        if (reduce->parsed())
            return run_reduce(red_kind, red_graph, red_s, red_k, red_t, red_d, red_fk, red_prefix);
        if (gadget->parsed()) return run_gadget(gadget_kind, gadget_k, gadget_verify, gadget_prefix);
        if (gen->parsed())
            return run_gen(gen_family, gen_n, gen_degree, gen_cycles, gen_seed, gen_out);
        if (suite_cmd->parsed())
            return run_suite(suite_name, suite_seed, suite_scale, suite_budget);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitUsage;
}
