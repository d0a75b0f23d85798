#include "vcr/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "vcr/fpt.hpp"
#include "vcr/generators.hpp"
#include "vcr/polysolve.hpp"
#include "vcr/reductions.hpp"

namespace vcr::suite {

namespace {

std::string describe_instance(const Graph& g, const VertexSet& s, const VertexSet& t, int k) {
    std::ostringstream os;
    os << "graph{" << format_graph(g) << "} s={" << format_vertex_set(s) << "} t={"
       << format_vertex_set(t) << "} k=" << k;
    return os.str();
}

int scaled(int count, double scale) { return std::max(1, static_cast<int>(count * scale)); }

// --- golden normalizer example ----------------------------------------------

SuiteResult golden_nice(const SuiteOptions&) {
    SuiteResult r{"golden-nice", false, "", 0};
    Graph g(6, {{1, 5}, {2, 5}, {3, 5}, {4, 5}, {1, 6}, {3, 6}});
    VertexCover s(g, {5, 6});
    VertexCover t(g, {1, 2, 3, 4});
    EditSequence out =
        convert_to_nice(g, s, t, parse_edit_sequence("+1 +2 +3 +4 -5 -6"));
    std::string got = format_edit_sequence(out);
    r.pass = got == "+1 +3 -6 +2 +4 -5";
    r.detail = "output " + got + (r.pass ? " matches" : " differs from +1 +3 -6 +2 +4 -5");
    return r;
}

// --- normalizer property suite ----------------------------------------------

SuiteResult nice_property(const SuiteOptions& opt) {
    SuiteResult r{"nice-property", false, "", 0};
    SplitMix64 seeds(opt.seed);
    const int total = scaled(1000, opt.scale);
    int done = 0;
    for (int it = 0; it < total; ++it) {
        GenSpec spec;
        spec.family = GraphFamily::bounded_degree;
        spec.n = 4 + static_cast<int>(seeds.below(11));  // n <= 14
        spec.degree_bound = 4;
        spec.seed = seeds.next();
        Graph g = gen_graph(spec);
        auto [sc, unused] = gen_cover_pair(g, seeds.next());
        int k = sc.size() + 1 + static_cast<int>(seeds.below(3));
        EditSequence walk = oracle::random_walk_harvest(
            g, sc, k, 2 + static_cast<int>(seeds.below(10)), seeds.next());
        TraceResult tr = trace(g, sc, walk);
        if (!tr.valid) {
            r.detail = "harvested walk failed to trace";
            return r;
        }
        VertexCover t(g, tr.final_set);
        int d = std::max(1, g.max_degree());
        EditSequence out = convert_to_nice(g, sc, t, walk);
        TraceResult otr = trace(g, sc, out);
        bool ok = is_nice(g, sc, out, d) && otr.valid && otr.final_set == t.members() &&
                  out.size() == walk.size() && is_d_well_formed(out, d) &&
                  out.touch_counts() == walk.touch_counts();
        for (std::size_t p = 0; ok && p < tr.prefix_sizes.size(); ++p)
            ok = otr.prefix_sizes[p] <= tr.prefix_sizes[p];
        if (!ok) {
            r.detail = "violation on " +
                       describe_instance(g, sc.members(), t.members(), k) + " walk=[" +
                       format_edit_sequence(walk) + "]";
            return r;
        }
        ++done;
    }
    r.pass = true;
    r.detail = std::to_string(done) + " harvested sequences normalized and verified";
    return r;
}

// --- solver vs oracle equivalence -------------------------------------------

SuiteResult solver_oracle(const SuiteOptions& opt, const std::string& name, GraphFamily family,
                          int instances,
                          const std::function<SolveOutcome(const ReconfigInstance&)>& solver) {
    SuiteResult r{name, false, "", 0};
    SplitMix64 seeds(opt.seed + 1);
    int checked = 0;
    std::map<std::string, int> cells;
    for (int it = 0; it < instances; ++it) {
        GenSpec spec;
        spec.family = family;
        spec.n = 2 + static_cast<int>(seeds.below(11));  // n <= 12
        if (family == GraphFamily::cactus && spec.n < 3) spec.n = 3;
        spec.seed = seeds.next();
        Graph g = gen_graph(spec);
        auto [s, t] = gen_cover_pair(g, seeds.next());
        for (int k = std::max(s.size(), t.size()); k <= g.vertex_count(); ++k) {
            ReconfigInstance inst(g, s, t, k);
            SolveOutcome fast = solver(inst);
            SolveOutcome slow = oracle::bfs_shortest(inst);
            bool ok = fast.yes == slow.yes &&
                      (!fast.yes || *fast.length == *slow.length);
            if (fast.yes && ok) {
                TraceResult tr = trace(g, s, *fast.witness);
                ok = tr.valid && tr.final_set == t.members() && tr.cap <= k;
            }
            if (!ok) {
                r.detail =
                    "mismatch on " + describe_instance(g, s.members(), t.members(), k) +
                    " solver=" + (fast.yes ? std::to_string(*fast.length) : "NO") +
                    " oracle=" + (slow.yes ? std::to_string(*slow.length) : "NO");
                return r;
            }
            ++cells[fast.reason.substr(0, fast.reason.find(':'))];
            ++checked;
        }
    }
    r.pass = true;
    r.detail = std::to_string(checked) + " instances matched the oracle (" +
               std::to_string(cells.size()) + " distinct outcome cells)";
    return r;
}

// --- the 2-bounded cycle schedule -------------------------------------------

SuiteResult cycle_schedule(const SuiteOptions&) {
    SuiteResult r{"cycle-schedule", false, "", 0};
    for (int half = 2; half <= 6; ++half) {
        int n = 2 * half;
        std::vector<std::pair<int, int>> e;
        for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
        e.emplace_back(1, n);
        Graph g(n, e);
        VertexSet odd, even;
        for (int v = 1; v <= n; v += 2) odd.push_back(v);
        for (int v = 2; v <= n; v += 2) even.push_back(v);
        VertexCover s(g, odd), t(g, even);
        BoundedPrefix p = find_cactus_prefix(g, s, t);
        TraceResult tr = trace(g, s, p.moves);
        int peak = 0;
        for (int sz : tr.prefix_sizes) peak = std::max(peak, sz - s.size());
        if (!tr.valid || peak != 2 || p.c != 2 || !verify_bounded_prefix(g, s, t, p)) {
            r.detail = "C_" + std::to_string(n) + " schedule peak " + std::to_string(peak);
            return r;
        }
    }
    r.pass = true;
    r.detail = "C_4..C_12 schedules peak at exactly +2";
    return r;
}

// --- FPT solver vs oracle ---------------------------------------------------

SuiteResult fpt_oracle(const SuiteOptions& opt) {
    SuiteResult r{"fpt-oracle", false, "", 0};
    SplitMix64 seeds(opt.seed + 2);
    const int total = scaled(300, opt.scale);
    int checked = 0;
    for (int it = 0; it < total; ++it) {
        GenSpec spec;
        spec.family = GraphFamily::bounded_degree;
        spec.n = 3 + static_cast<int>(seeds.below(10));  // n <= 12
        spec.degree_bound = 3;
        spec.seed = seeds.next();
        Graph g = gen_graph(spec);
        auto [s, t] = gen_cover_pair(g, seeds.next());
        int l = 1 + static_cast<int>(seeds.below(6));  // l <= 6
        int k = std::max(s.size(), t.size()) + static_cast<int>(seeds.below(3));
        ReconfigInstance inst(g, s, t, k, l);

        Budget budget{opt.budget, 0};
        SolveOutcome fast = solve_fpt(inst, budget);
        SolveOutcome slow = oracle::bfs_shortest(inst);
        bool oracle_yes = slow.yes && *slow.length <= l;
        bool ok = fast.yes == oracle_yes;
        if (fast.yes && ok)
            ok = is_tight(g, s, *fast.witness, k) && *fast.length <= l;
        if (!ok) {
            r.detail = "mismatch on " + describe_instance(g, s.members(), t.members(), k) +
                       " l=" + std::to_string(l);
            return r;
        }
        ++checked;
    }
    r.pass = true;
    r.detail = std::to_string(checked) + " bounded-degree instances matched the oracle";
    return r;
}

// --- reduction double-oracle suites ------------------------------------------

SuiteResult reductions_suite(const SuiteOptions& opt) {
    SuiteResult r{"reductions", false, "", 0};
    SplitMix64 seeds(opt.seed + 3);

    // (a) clique <-> constrained crown, exhaustive for n <= 6, k <= 4.
    std::uint64_t checked_a = 0;
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) all_edges.emplace_back(u, v);
        std::uint64_t limit = std::uint64_t{1} << all_edges.size();
        std::uint64_t step = 1;
        if (opt.scale < 1.0 && n == 6) step = 8;  // sampled subset on quick runs
        for (std::uint64_t mask = 0; mask < limit; mask += step) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < all_edges.size(); ++i)
                if (mask & (std::uint64_t{1} << i)) edges.push_back(all_edges[i]);
            Graph g(n, edges);
            for (int k = 2; k <= 4; ++k) {
                BccInstance bcc = reduce_clique_to_bcc(g, k);
                bool clique = has_clique_bruteforce(g, k);
                bool crown = find_constrained_crown_bruteforce(bcc.graph, bcc.side_a,
                                                               bcc.side_b, bcc.k, bcc.d)
                                 .has_value();
                if (clique != crown) {
                    r.detail = "clique/crown mismatch on n=" + std::to_string(n) +
                               " mask=" + std::to_string(mask) + " k=" + std::to_string(k);
                    return r;
                }
                ++checked_a;
            }
        }
    }
    for (int it = 0; it < scaled(100, opt.scale); ++it) {
        int n = 7;
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (seeds.chance(0.5)) edges.emplace_back(u, v);
        Graph g(n, edges);
        int k = 2 + static_cast<int>(seeds.below(3));
        BccInstance bcc = reduce_clique_to_bcc(g, k);
        if (has_clique_bruteforce(g, k) !=
            find_constrained_crown_bruteforce(bcc.graph, bcc.side_a, bcc.side_b, bcc.k, bcc.d)
                .has_value()) {
            r.detail = "clique/crown mismatch on a random n=7 graph";
            return r;
        }
        ++checked_a;
    }

    // (b) crown <-> VCR on random bipartite graphs.
    std::uint64_t checked_b = 0;
    for (int it = 0; it < scaled(120, opt.scale); ++it) {
        int na = 1 + static_cast<int>(seeds.below(4));
        int nb = 1 + static_cast<int>(seeds.below(4));
        int n = na + nb;
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= na; ++u)
            for (int v = na + 1; v <= n; ++v)
                if (seeds.chance(0.5)) edges.emplace_back(u, v);
        Graph g(n, edges);
        VertexSet A, B;
        for (int v = 1; v <= na; ++v) A.push_back(v);
        for (int v = na + 1; v <= n; ++v) B.push_back(v);
        int t = 1 + static_cast<int>(seeds.below(2));
        int d = 1 + static_cast<int>(seeds.below(2));
        auto crown = find_constrained_crown_bruteforce(g, A, B, t, d);
        BccVcrReduction red = reduce_bcc_to_vcr(g, A, B, t, d);
        SolveOutcome slow = oracle::bfs_shortest(red.instance);
        bool vcr_yes = slow.yes && *slow.length <= *red.instance.l;
        if (crown.has_value() != vcr_yes) {
            r.detail = "crown/VCR mismatch: " + describe_instance(g, A, B, t) +
                       " d=" + std::to_string(d);
            return r;
        }
        if (crown) {
            EditSequence w = bcc_vcr_witness(red, crown->crown);
            if (!is_tight(red.instance.g, red.instance.s, w, red.instance.k) ||
                w.size() > *red.instance.l) {
                r.detail = "crown witness failed to trace tight";
                return r;
            }
        }
        ++checked_b;
    }

    // (c) compression <-> VCR on random graphs.
    std::uint64_t checked_c = 0;
    for (int it = 0; it < scaled(120, opt.scale); ++it) {
        int n = 2 + static_cast<int>(seeds.below(6));
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (seeds.chance(0.5)) edges.emplace_back(u, v);
        Graph g(n, edges);
        int k = 1 + static_cast<int>(seeds.below(3));
        auto c = find_cover_of_size_bruteforce(g, k);
        if (!c) continue;
        CompressionVcrReduction red = reduce_compression_to_vcr(g, VertexCover(g, *c), k);
        auto smaller = find_cover_of_size_bruteforce(g, k - 1);
        SolveOutcome slow = oracle::bfs_shortest(red.instance);
        bool vcr_yes = slow.yes && *slow.length <= *red.instance.l;
        if (smaller.has_value() != vcr_yes) {
            r.detail = "compression/VCR mismatch on " +
                       describe_instance(g, *c, *c, k);
            return r;
        }
        if (smaller) {
            EditSequence w = compression_vcr_witness(red, *smaller);
            bool disjoint = set_intersection(*c, *smaller).empty();
            if (!is_tight(red.instance.g, red.instance.s, w, red.instance.k) ||
                (disjoint && w.size() != 6 * k - 2)) {
                r.detail = "compression witness length/capacity violation";
                return r;
            }
        }
        ++checked_c;
    }

    r.pass = true;
    r.detail = std::to_string(checked_a) + " clique, " + std::to_string(checked_b) +
               " crown, " + std::to_string(checked_c) + " compression equivalences";
    return r;
}

// --- W_k structure and witness ------------------------------------------------

SuiteResult wk_suite(const SuiteOptions&) {
    SuiteResult r{"wk", false, "", 0};
    for (int k = 4; k <= 6; ++k) {
        NecklaceGadget w = build_wk(k);
        if (w.graph().vertex_count() != 6 * k * k) {
            r.detail = "W_" + std::to_string(k) + " vertex count";
            return r;
        }
        for (int v = 1; v <= w.graph().vertex_count(); ++v)
            if (w.graph().degree(v) != 4) {
                r.detail = "W_" + std::to_string(k) + " not 4-regular";
                return r;
            }
        if (w.s_cover().size() != 3 * k * k || w.t_cover().size() != 3 * k * k ||
            !removable_vertices(w.graph(), w.s_cover().members()).empty() ||
            !removable_vertices(w.graph(), w.t_cover().members()).empty()) {
            r.detail = "W_" + std::to_string(k) + " cover sizes or minimality";
            return r;
        }
        EditSequence seq = wk_witness_sequence(w);
        TraceResult tr = trace(w.graph(), w.s_cover(), seq);
        bool once = true;
        for (auto [v, count] : seq.touch_counts()) once = once && count == 1;
        if (!tr.valid || tr.final_set != w.t_cover().members() ||
            seq.size() != 6 * k * k || !once || tr.cap > 3 * k * k + k + 3) {
            r.detail = "W_" + std::to_string(k) + " witness violation (cap " +
                       std::to_string(tr.cap) + ")";
            return r;
        }
    }
    r.pass = true;
    r.detail = "W_4, W_5, W_6 structure and witnesses verified";
    return r;
}

// --- counting identities --------------------------------------------------------

SuiteResult counting(const SuiteOptions&) {
    SuiteResult r{"counting", false, "", 0};
    for (int l = 1; l <= 8; ++l) {
        std::uint64_t full = enumerate_unlabeled(
            l, false, [](const EditSequence&) { return EnumVerdict::descend; });
        std::uint64_t partial = enumerate_unlabeled(
            l, true, [](const EditSequence&) { return EnumVerdict::descend; });
        std::uint64_t pow3 = 1;
        for (int i = 0; i < l + 1; ++i) pow3 *= 3;
        if (full != (std::uint64_t{1} << (l + 1)) - 2 || partial != (pow3 - 3) / 2) {
            r.detail = "unlabeled counts wrong at l=" + std::to_string(l);
            return r;
        }
    }

    auto multinomial = [](const std::vector<int>& parts) {
        std::uint64_t acc = 1;
        int total = 0;
        for (int p : parts) {
            for (int i = 1; i <= p; ++i) {
                acc = acc * static_cast<std::uint64_t>(total + i) / static_cast<std::uint64_t>(i);
            }
            total += p;
        }
        return acc;
    };
    std::vector<std::vector<int>> shapes{{1, 1}, {2, 1},    {2, 2},    {3, 2},
                                         {3, 3}, {2, 2, 2}, {3, 2, 2}, {4, 4},
                                         {1, 1, 1, 1, 2}};
    for (const auto& shape : shapes) {
        std::vector<EditSequence> seqs;
        int label = 1;
        for (int len : shape) {
            std::vector<Marker> mk;
            for (int i = 0; i < len; ++i) mk.push_back(Marker::add(label++));
            seqs.push_back(EditSequence(mk));
        }
        std::uint64_t count =
            mix_enumerate(seqs, [](const EditSequence&) { return true; });
        if (count != multinomial(shape)) {
            r.detail = "mix cardinality mismatch";
            return r;
        }
    }
    r.pass = true;
    r.detail = "unlabeled totals for l<=8 and mix multinomials for sizes <=8";
    return r;
}

// --- multicolored IS vs brute force ---------------------------------------------

SuiteResult mis_suite(const SuiteOptions& opt) {
    SuiteResult r{"mis", false, "", 0};
    SplitMix64 seeds(opt.seed + 4);
    const int total = scaled(200, opt.scale);
    int checked = 0;
    while (checked < total) {
        int n = 2 + static_cast<int>(seeds.below(13));  // n <= 14
        int colors = 1 + static_cast<int>(seeds.below(4));
        if (colors > n) continue;
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (seeds.chance(0.3)) e.emplace_back(u, v);
        ColoredGraph cg;
        cg.graph = Graph(n, e);
        cg.color.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 1; v <= n; ++v)
            cg.color[static_cast<std::size_t>(v)] = 1 + static_cast<int>(seeds.below(colors));
        for (int c = 1; c <= colors; ++c) cg.color[static_cast<std::size_t>(c)] = c;

        int d_prime = 1;
        for (int v = 1; v <= n; ++v)
            for (int c = 1; c <= colors; ++c) {
                if (c == cg.color[static_cast<std::size_t>(v)]) continue;
                int cnt = 0;
                for (int u : cg.graph.neighbors(v))
                    if (cg.color[static_cast<std::size_t>(u)] == c) ++cnt;
                d_prime = std::max(d_prime, cnt);
            }

        std::vector<VertexSet> classes(static_cast<std::size_t>(colors));
        for (int v = 1; v <= n; ++v)
            classes[static_cast<std::size_t>(cg.color[static_cast<std::size_t>(v)]) - 1]
                .push_back(v);
        std::function<bool(std::size_t, VertexSet&)> brute = [&](std::size_t i,
                                                                 VertexSet& acc) {
            if (i == classes.size()) return true;
            for (int v : classes[i]) {
                bool ok = true;
                for (int u : acc)
                    if (cg.graph.has_edge(u, v)) ok = false;
                if (!ok) continue;
                acc.push_back(v);
                if (brute(i + 1, acc)) return true;
                acc.pop_back();
            }
            return false;
        };
        VertexSet acc;
        bool expected = brute(0, acc);
        Budget budget{opt.budget, 0};
        bool got = multicolored_is(cg, colors, d_prime, budget).has_value();
        if (expected != got) {
            r.detail = "MIS disagreement on an n=" + std::to_string(n) + " graph with " +
                       std::to_string(colors) + " colors";
            return r;
        }
        ++checked;
    }
    r.pass = true;
    r.detail = std::to_string(checked) + " colored graphs matched brute force";
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"golden-nice", "nice-property", "tree-oracle", "cactus-oracle", "cycle-schedule",
            "fpt-oracle",  "reductions",    "wk",          "counting",      "mis"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    if (name == "golden-nice")
        r = golden_nice(opt);
    else if (name == "nice-property")
        r = nice_property(opt);
    else if (name == "tree-oracle")
        r = solver_oracle(opt, "tree-oracle", GraphFamily::tree, scaled(500, opt.scale),
                          [](const ReconfigInstance& i) { return solve_tree(i); });
    else if (name == "cactus-oracle")
        r = solver_oracle(opt, "cactus-oracle", GraphFamily::cactus, scaled(500, opt.scale),
                          [](const ReconfigInstance& i) { return solve_cactus(i); });
    else if (name == "cycle-schedule")
        r = cycle_schedule(opt);
    else if (name == "fpt-oracle")
        r = fpt_oracle(opt);
    else if (name == "reductions")
        r = reductions_suite(opt);
    else if (name == "wk")
        r = wk_suite(opt);
    else if (name == "counting")
        r = counting(opt);
    else if (name == "mis")
        r = mis_suite(opt);
    else
        throw InvariantError("unknown suite '" + name + "'");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

bool run_all(const SuiteOptions& opt, std::ostream& out) {
    bool all = true;
    out << "seed=" << opt.seed << " scale=" << opt.scale << " budget=" << opt.budget << "\n";
    for (const std::string& name : suite_names()) {
        SuiteResult r = run_suite(name, opt);
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << " ("
            << r.seconds << "s)\n";
        out.flush();
        all = all && r.pass;
    }
    return all;
}

}  // namespace vcr::suite
