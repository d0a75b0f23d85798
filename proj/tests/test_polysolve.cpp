#include "doctest.h"
#include "vcr/generators.hpp"
#include "vcr/polysolve.hpp"

using namespace vcr;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(1, n);
    return Graph(n, e);
}

}  // namespace

TEST_CASE("find_tree_prefix") {
    Graph p3 = path(3);
    BoundedPrefix p = find_tree_prefix(p3, VertexCover(p3, {1, 3}), VertexCover(p3, {2}));
    CHECK(p.from_side == PrefixSide::source);
    CHECK(format_edit_sequence(p.moves) == "+2 -1");
    CHECK(p.c == 1);
    CHECK(verify_bounded_prefix(p3, VertexCover(p3, {1, 3}), VertexCover(p3, {2}), p));

    // Isolated difference vertex: a single removal with zero slack.
    Graph p2 = path(2);
    Graph g(3, {{1, 2}});
    BoundedPrefix q = find_tree_prefix(g, VertexCover(g, {1, 3}), VertexCover(g, {1}));
    CHECK(q.c == 0);
    CHECK(format_edit_sequence(q.moves) == "-3");
    CHECK(verify_bounded_prefix(g, VertexCover(g, {1, 3}), VertexCover(g, {1}), q));

    Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
    BoundedPrefix r = find_tree_prefix(star, VertexCover(star, {2, 3, 4}), VertexCover(star, {1}));
    CHECK(r.c == 1);
    CHECK(format_edit_sequence(r.moves) == "+1 -2");

    CHECK_THROWS_AS(find_tree_prefix(p3, VertexCover(p3, {2}), VertexCover(p3, {2})),
                    InvariantError);
}

TEST_CASE("find_cactus_prefix cycle schedules") {
    // C4 difference: schedule adds both odd-labeled vertices first.
    Graph c4 = cycle(4);
    BoundedPrefix p = find_cactus_prefix(c4, VertexCover(c4, {1, 3}), VertexCover(c4, {2, 4}));
    CHECK(p.c == 2);
    CHECK(p.from_side == PrefixSide::source);
    CHECK(format_edit_sequence(p.moves) == "+2 +4 -1 -3");
    CHECK(verify_bounded_prefix(c4, VertexCover(c4, {1, 3}), VertexCover(c4, {2, 4}), p));

    // C6: peak slack exactly 2 along the labeled schedule.
    Graph c6 = cycle(6);
    VertexCover s(c6, {1, 3, 5}), t(c6, {2, 4, 6});
    BoundedPrefix q = find_cactus_prefix(c6, s, t);
    CHECK(q.c == 2);
    TraceResult tr = trace(c6, s, q.moves);
    CHECK(tr.valid);
    int peak = 0;
    for (int sz : tr.prefix_sizes) peak = std::max(peak, sz - s.size());
    CHECK(peak == 2);

    // Condition (1) has priority when a low-degree vertex exists.
    Graph c4_pendant(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {4, 5}});
    BoundedPrefix lp = find_cactus_prefix(c4_pendant, VertexCover(c4_pendant, {1, 3, 5}),
                                          VertexCover(c4_pendant, {2, 4}));
    CHECK(lp.c <= 1);
}

TEST_CASE("drive_prefixes") {
    Graph p3 = path(3);
    VertexCover s(p3, {1, 3}), t(p3, {2});
    SolveOutcome same = drive_prefixes(p3, s, s, 3, 1, find_tree_prefix);
    CHECK(same.yes);
    CHECK(same.length == 0);

    SolveOutcome out = drive_prefixes(p3, s, t, 3, 1, find_tree_prefix);
    CHECK(out.yes);
    CHECK(out.length == 3);
    CHECK(out.cap <= 3);

    CHECK_THROWS_AS(drive_prefixes(p3, s, t, 2, 1, find_tree_prefix), InvariantError);

    // Random trees: length |S delta T| whenever k leaves one unit of slack.
    SplitMix64 rng(31);
    for (int it = 0; it < 40; ++it) {
        GenSpec spec;
        spec.family = GraphFamily::tree;
        spec.n = rng.range(2, 10);
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        auto [a, b] = gen_cover_pair(g, rng.next());
        int k = std::max(a.size(), b.size()) + 1;
        SolveOutcome o = drive_prefixes(g, a, b, k, 1, find_tree_prefix);
        CHECK(o.yes);
        CHECK(*o.length ==
              static_cast<int>(set_symmetric_difference(a.members(), b.members()).size()));
    }
}

TEST_CASE("solve_tree examples") {
    Graph p3 = path(3);
    ReconfigInstance no(p3, VertexCover(p3, {1, 3}), VertexCover(p3, {2}), 2);
    CHECK_FALSE(solve_tree(no).yes);

    ReconfigInstance yes(p3, VertexCover(p3, {1, 3}), VertexCover(p3, {2}), 3);
    SolveOutcome out = solve_tree(yes);
    CHECK(out.yes);
    CHECK(out.length == 3);

    CHECK_THROWS_AS(solve_tree(ReconfigInstance(cycle(3), VertexCover(cycle(3), {1, 2}),
                                                VertexCover(cycle(3), {1, 2}), 2)),
                    InvariantError);
}

TEST_CASE("solve_tree matches the oracle on random trees") {
    SplitMix64 rng(37);
    for (int it = 0; it < 120; ++it) {
        GenSpec spec;
        spec.family = GraphFamily::tree;
        spec.n = rng.range(2, 10);
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        auto [s, t] = gen_cover_pair(g, rng.next());
        for (int k = std::max(s.size(), t.size()); k <= g.vertex_count(); ++k) {
            ReconfigInstance inst(g, s, t, k);
            SolveOutcome fast = solve_tree(inst);
            SolveOutcome slow = oracle::bfs_shortest(inst);
            REQUIRE(fast.yes == slow.yes);
            if (fast.yes) REQUIRE(*fast.length == *slow.length);
        }
    }
}

TEST_CASE("solve_cactus examples") {
    Graph tri = cycle(3);
    ReconfigInstance no(tri, VertexCover(tri, {1, 2}), VertexCover(tri, {2, 3}), 2);
    CHECK_FALSE(solve_cactus(no).yes);

    ReconfigInstance yes(tri, VertexCover(tri, {1, 2}), VertexCover(tri, {2, 3}), 3);
    SolveOutcome out = solve_cactus(yes);
    CHECK(out.yes);
    CHECK(out.length == 2);

    Graph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_THROWS_AS(
        solve_cactus(ReconfigInstance(k4, VertexCover(k4, {1, 2, 3}), VertexCover(k4, {1, 2, 3}), 3)),
        InvariantError);
}

TEST_CASE("solve_cactus boundary corrections stay exact") {
    // Both covers at size k-1 where the literal removable-pair correction
    // would overshoot: the true shortest path goes through size k.
    Graph p4 = path(4);
    ReconfigInstance inst(p4, VertexCover(p4, {1, 3, 4}), VertexCover(p4, {2, 3, 4}), 4);
    SolveOutcome fast = solve_cactus(inst);
    SolveOutcome slow = oracle::bfs_shortest(inst);
    CHECK(fast.yes);
    CHECK(*fast.length == 2);
    CHECK(*fast.length == *slow.length);
}

TEST_CASE("solve_cactus matches the oracle on random cacti") {
    SplitMix64 rng(43);
    for (int it = 0; it < 120; ++it) {
        GenSpec spec;
        spec.family = GraphFamily::cactus;
        spec.n = rng.range(3, 10);
        spec.seed = rng.next();
        Graph g = gen_graph(spec);
        auto [s, t] = gen_cover_pair(g, rng.next());
        for (int k = std::max(s.size(), t.size()); k <= g.vertex_count(); ++k) {
            ReconfigInstance inst(g, s, t, k);
            SolveOutcome fast = solve_cactus(inst);
            SolveOutcome slow = oracle::bfs_shortest(inst);
            REQUIRE(fast.yes == slow.yes);
            if (fast.yes) REQUIRE(*fast.length == *slow.length);
        }
    }
}
