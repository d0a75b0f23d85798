#include <set>

#include "doctest.h"
#include "vcr/fpt.hpp"
#include "vcr/generators.hpp"
#include "vcr/polysolve.hpp"

using namespace vcr;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Budget unlimited() { return Budget{0, 0}; }

}  // namespace

TEST_CASE("decompose_layers") {
    Graph p5 = path(5);
    // S = T: every layer empty, C_ST unreachable from the empty difference.
    VertexCover s(p5, {2, 4});
    LayerDecomposition same = decompose_layers(p5, s, s);
    CHECK(same.c_at(1).empty());
    CHECK(same.c_inf == VertexSet{2, 4});
    CHECK(same.o_inf == VertexSet{1, 3, 5});

    // P5 with S = {2,3,4}, T = {2,4,5}: difference {3,5}, C at distance 1.
    VertexCover s2(p5, {2, 3, 4}), t2(p5, {2, 4, 5});
    LayerDecomposition d = decompose_layers(p5, s2, t2);
    CHECK(d.c_at(1) == VertexSet{2, 4});
    CHECK(d.o_at(2) == VertexSet{1});
    CHECK(d.c_inf.empty());
}

TEST_CASE("make_avcr_instances") {
    Graph p5 = path(5);
    VertexCover s(p5, {2, 3, 4}), t(p5, {2, 4, 5});
    ReconfigInstance inst(p5, s, t, 4, 2);
    auto instances = make_avcr_instances(inst, 2);
    CHECK(instances.size() == 4);  // 2l
    for (const auto& a : instances) {
        CHECK(separated(p5, a.x_set, a.r_set));
        VertexSet all = set_union(set_union(a.x_set, a.w_set), a.r_set);
        CHECK(all == VertexSet{1, 2, 3, 4, 5});
        CHECK(set_intersection(a.x_set, a.w_set).empty());
        CHECK(set_intersection(a.x_set, a.r_set).empty());
    }
    CHECK(instances[0].w_set == VertexSet{2, 4});
}

TEST_CASE("ramsey_bound") {
    CHECK(ramsey_bound(3, 3) == 6);
    CHECK(ramsey_bound(2, 5) == 5);   // C(5, 4) = 5
    CHECK(ramsey_bound(4, 1) == 1);   // C(3, 0) = 1
    CHECK(ramsey_bound(1, 4) == 1);
    CHECK(ramsey_bound(5, 5) == 70);  // C(8, 4)
    CHECK_THROWS_AS(ramsey_bound(0, 1), InvariantError);
    CHECK_THROWS_AS(ramsey_bound(40, 40), TooLargeError);
}

TEST_CASE("find_independent_set") {
    Graph edgeless(4, {});
    CHECK(find_independent_set(edgeless, {1, 2, 3, 4}, 4) == VertexSet{1, 2, 3, 4});

    Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    auto is = find_independent_set(c4, {1, 2, 3, 4}, 2);
    REQUIRE(is.has_value());
    CHECK((*is == VertexSet{1, 3} || *is == VertexSet{2, 4}));

    Graph tri(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(find_independent_set(tri, {1, 2, 3}, 2).has_value());

    // Greedy can fail where exact search succeeds: star with the hub first.
    Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
    auto is3 = find_independent_set(star, {1, 2, 3, 4}, 3);
    REQUIRE(is3.has_value());
    CHECK(*is3 == VertexSet{2, 3, 4});
}

TEST_CASE("multicolored_is") {
    Budget b = unlimited();
    // Single color: any vertex works.
    {
        ColoredGraph cg;
        cg.graph = Graph(3, {{1, 2}});
        cg.color = {0, 1, 1, 1};
        auto r = multicolored_is(cg, 1, 2, b);
        REQUIRE(r.has_value());
        CHECK(r->size() == 1);
    }
    // Complete bipartite between the two color classes: impossible.
    {
        ColoredGraph cg;
        cg.graph = Graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
        cg.color = {0, 1, 1, 2, 2};
        CHECK_FALSE(multicolored_is(cg, 2, 2, b).has_value());
        CHECK_THROWS_AS(multicolored_is(cg, 3, 2, b), InvariantError);
    }
}

TEST_CASE("multicolored_is agrees with brute force") {
    SplitMix64 rng(53);
    Budget b = unlimited();
    for (int it = 0; it < 80; ++it) {
        int n = rng.range(2, 10);
        int colors = rng.range(1, std::min(4, n));
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.chance(0.35)) e.emplace_back(u, v);
        ColoredGraph cg;
        cg.graph = Graph(n, e);
        cg.color.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 1; v <= n; ++v) cg.color[static_cast<std::size_t>(v)] = rng.range(1, colors);
        // Make sure every color class is nonempty.
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

        // Brute force over all color transversals.
        bool exists = false;
        std::vector<VertexSet> classes(static_cast<std::size_t>(colors));
        for (int v = 1; v <= n; ++v)
            classes[static_cast<std::size_t>(cg.color[static_cast<std::size_t>(v)]) - 1].push_back(v);
        std::function<bool(std::size_t, VertexSet&)> brute = [&](std::size_t i, VertexSet& acc) {
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
        exists = brute(0, acc);
        CHECK(multicolored_is(cg, colors, d_prime, b).has_value() == exists);
    }
}

TEST_CASE("solve_vcw") {
    Budget b = unlimited();
    Graph p3 = path(3);
    VertexCover s13(p3, {1, 3});

    CHECK(solve_vcw(p3, s13, {}, 2, b) == EditSequence{});

    // A single removal needs a vertex with no neighbor outside the cover.
    Graph g(3, {{1, 2}});
    VertexCover s(g, {1, 3});
    auto r = solve_vcw(g, s, parse_edit_sequence("-"), 2, b);
    REQUIRE(r.has_value());
    CHECK(format_edit_sequence(*r) == "-3");

    // No such vertex: P3 with the minimal cover {2}.
    VertexCover s2(p3, {2});
    CHECK_FALSE(solve_vcw(p3, s2, parse_edit_sequence("-"), 2, b).has_value());

    // Central segment [+ -] on P3 from {1,3}: add 2, remove an endpoint.
    auto c = solve_vcw(p3, s13, parse_edit_sequence("+ -"), 2, b);
    REQUIRE(c.has_value());
    CHECK(is_nice(p3, s13, *c, 2));
    CHECK((format_edit_sequence(*c) == "+2 -1" || format_edit_sequence(*c) == "+2 -3"));

    // With an ending piece the completion re-adds the odd-touched vertices.
    auto w = solve_vcw(p3, s13, parse_edit_sequence("+ - +"), 2, b);
    REQUIRE(w.has_value());
    CHECK(is_nice(p3, s13, *w, 2));
    // A closed walk: remove an isolated cover vertex and add it back.
    auto closed = solve_vcw(g, s, parse_edit_sequence("- +"), 2, b);
    REQUIRE(closed.has_value());
    CHECK(format_edit_sequence(*closed) == "-3 +3");
    TraceResult tr = trace(g, s, *closed);
    CHECK(tr.valid);
    CHECK(tr.final_set == s.members());

    CHECK_THROWS_AS(solve_vcw(p3, s13, parse_edit_sequence("+ - -"), 1, b), InvariantError);
}

TEST_CASE("const_aux_graph basics") {
    Budget b = unlimited();
    Graph single(2, {{1, 2}});
    VertexCover s(single, {1});
    AuxGraph aux = const_aux_graph(single, s, {parse_edit_sequence("+")}, 2, b);
    // The only nice single-addition from {1} is +2.
    REQUIRE(aux.vertices.size() == 1);
    CHECK(format_edit_sequence(aux.vertices[0].seq) == "+2");
    CHECK(aux.vertices[0].color == 1);
    CHECK(aux.edges.empty());

    // Two pieces realizable only on adjacent sets produce an aux edge and no
    // rainbow independent set of size 2.
    Graph p3 = path(3);
    VertexCover s3(p3, {1, 2, 3});
    AuxGraph aux2 =
        const_aux_graph(p3, s3, {parse_edit_sequence("+"), parse_edit_sequence("+")}, 2, b);
    CHECK(aux2.vertices.empty());  // nothing to add into a full cover

    Graph two_comp(4, {{1, 2}, {3, 4}});
    VertexCover sc(two_comp, {1, 3});
    AuxGraph aux3 =
        const_aux_graph(two_comp, sc, {parse_edit_sequence("+ -"), parse_edit_sequence("+ -")},
                        1, b);
    ColoredGraph cg = to_colored_graph(aux3);
    Budget b2 = unlimited();
    auto mis = multicolored_is(cg, 2, std::max(1, aux3.cross_color_degree_bound()), b2);
    CHECK(mis.has_value());  // separated components admit a rainbow pair
}

TEST_CASE("solve_fpt basics") {
    Budget b = unlimited();
    Graph p3 = path(3);
    ReconfigInstance yes(p3, VertexCover(p3, {1, 3}), VertexCover(p3, {2}), 3, 3);
    SolveOutcome out = solve_fpt(yes, b);
    CHECK(out.yes);
    CHECK(*out.length == 3);

    ReconfigInstance tight_no(p3, VertexCover(p3, {1, 3}), VertexCover(p3, {2}), 2, 3);
    CHECK_FALSE(solve_fpt(tight_no, b).yes);

    // l below |S delta T| is an immediate NO.
    ReconfigInstance short_no(p3, VertexCover(p3, {1, 3}), VertexCover(p3, {2}), 3, 2);
    CHECK_FALSE(solve_fpt(short_no, b).yes);

    ReconfigInstance same(p3, VertexCover(p3, {2}), VertexCover(p3, {2}), 2, 0);
    CHECK(solve_fpt(same, b).yes);

    CHECK_THROWS_AS(solve_fpt(yes, b, 1), InvariantError);  // cannot lower d

    Budget tiny{50, 0};
    ReconfigInstance big(path(8), VertexCover(path(8), {2, 4, 6, 8}),
                         VertexCover(path(8), {1, 3, 5, 7}), 6, 8);
    CHECK_THROWS_AS(solve_fpt(big, tiny), BudgetError);
}

TEST_CASE("avcr instance disjunction equals the unrestricted oracle") {
    // Freezing each instance's wall must not lose reachability overall.
    SplitMix64 rng(83);
    int done = 0;
    for (int it = 0; it < 200 && done < 25; ++it) {
        GenSpec spec;
        spec.family = GraphFamily::bounded_degree;
        spec.n = rng.range(3, 9);
        spec.degree_bound = 3;
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        auto [s, t] = gen_cover_pair(g, rng.next());
        int l = rng.range(1, 4);
        int k = std::max(s.size(), t.size()) + rng.range(0, 2);
        if (static_cast<int>(
                set_symmetric_difference(s.members(), t.members()).size()) > l)
            continue;
        ReconfigInstance inst(g, s, t, k, l);

        bool any_restricted = false;
        for (const AvcrInstance& a : make_avcr_instances(inst, 3)) {
            SolveOutcome restricted = oracle::bfs_shortest(inst, a.w_set);
            if (restricted.yes && *restricted.length <= l) any_restricted = true;
        }
        SolveOutcome plain = oracle::bfs_shortest(inst);
        bool plain_yes = plain.yes && *plain.length <= l;
        REQUIRE(any_restricted == plain_yes);
        ++done;
    }
    CHECK(done == 25);
}

TEST_CASE("aux graph cross-color degree stays under the counting bound") {
    Budget b = unlimited();
    Graph p5 = path(5);
    VertexCover s(p5, {1, 3, 5});
    std::vector<EditSequence> pieces{parse_edit_sequence("+ -"), parse_edit_sequence("+ -")};
    AuxGraph aux = const_aux_graph(p5, s, pieces, 2, b);
    // (d+1) * l * 2^l * l! * d^{l^2(l+1)} with d = 2, l = 2.
    std::uint64_t bound = 3ull * 2 * 4 * 2 * (1ull << 12);
    CHECK(static_cast<std::uint64_t>(aux.cross_color_degree_bound()) <= bound);
    // Every stored sequence is nice with a connected touched set.
    for (const AuxVertex& v : aux.vertices) {
        CHECK(is_nice(p5, s, v.seq, 2));
        CHECK(connected_components(p5, v.seq.touched()).size() == 1);
    }
}

TEST_CASE("solve_avcr borrows capacity from the reservoir") {
    // X part: P3 on {3,4,5} swapping {3,5} -> {4} needs one unit above k;
    // R part: the edge {1,2} inside both covers donates it.
    Graph g(5, {{1, 2}, {3, 4}, {4, 5}});
    VertexCover s(g, {1, 2, 3, 5});
    VertexCover t(g, {1, 2, 4});
    ReconfigInstance inst(g, s, t, 4, 5);
    Budget b = unlimited();
    SolveOutcome out = solve_fpt(inst, b);
    REQUIRE(out.yes);
    CHECK(*out.length == 5);
    CHECK(is_tight(g, s, *out.witness, 4));
    // The first move must free capacity by removing a reservoir vertex.
    CHECK(out.witness->at(1).is_remove());
    CHECK((out.witness->at(1).label == 1 || out.witness->at(1).label == 2));
    SolveOutcome slow = oracle::bfs_shortest(inst);
    CHECK(slow.yes);
    CHECK(*slow.length == 5);
}

TEST_CASE("solve_fpt agrees with the oracle on small instances") {
    SplitMix64 rng(59);
    int done = 0;
    for (int it = 0; it < 200 && done < 40; ++it) {
        GenSpec spec;
        spec.family = GraphFamily::bounded_degree;
        spec.n = rng.range(3, 8);
        spec.degree_bound = 3;
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        auto [s, t] = gen_cover_pair(g, rng.next());
        int l = rng.range(1, 5);
        int k = std::max(s.size(), t.size()) + rng.range(0, 2);
        ReconfigInstance inst(g, s, t, k, l);

        Budget b{200'000'000, 0};
        SolveOutcome fast = solve_fpt(inst, b);
        SolveOutcome slow = oracle::bfs_shortest(inst);
        bool oracle_yes = slow.yes && *slow.length <= l;
        REQUIRE(fast.yes == oracle_yes);
        if (fast.yes) {
            CHECK(is_tight(g, s, *fast.witness, k));
            CHECK(*fast.length <= l);
        }
        ++done;
    }
    CHECK(done == 40);
}
