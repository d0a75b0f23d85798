#include "doctest.h"
#include "vcr/reductions.hpp"
#include "vcr/rng.hpp"

using namespace vcr;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(1, n);
    return Graph(n, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

}  // namespace

TEST_CASE("crown brute force basics") {
    Graph k11(2, {{1, 2}});
    auto c = find_constrained_crown_bruteforce(k11, {1}, {2}, 1, 0);
    REQUIRE(c.has_value());
    CHECK(c->crown.w_set == VertexSet{1});
    CHECK(c->crown.h_set == VertexSet{2});

    // Isolated A-vertex with the empty head.
    Graph iso(3, {{2, 3}});
    auto c2 = find_constrained_crown_bruteforce(iso, {1, 2}, {3}, 2, 1);
    REQUIRE(c2.has_value());
    CHECK(c2->crown.w_set == VertexSet{1});
    CHECK(c2->crown.h_set.empty());

    // C4 as K_{2,2}: every single-head crown has empty W.
    Graph c4 = cycle(4);
    CHECK_FALSE(find_constrained_crown_bruteforce(c4, {1, 3}, {2, 4}, 1, 1).has_value());
}

TEST_CASE("verify_crown diagnostics") {
    Graph k11(2, {{1, 2}});
    CHECK(verify_crown(k11, {1}, {2}, {{1}, {2}}, 1, 0).ok);

    CrownCheck slack = verify_crown(k11, {1}, {2}, {{1}, {2}}, 1, 1);
    CHECK_FALSE(slack.ok);
    CHECK(slack.reason.find("slack") != std::string::npos);

    // Saturation through a bottleneck that still admits a matching.
    Graph hall(5, {{1, 4}, {2, 4}, {3, 4}, {3, 5}});
    CHECK(verify_crown(hall, {1, 2, 3}, {4, 5}, {{1, 2, 3}, {4, 5}}, 2, 1).ok);

    // True Hall violation: two heads matched only through the same W vertex
    // (the other W members are isolated and add slack but no matching edges).
    Graph bad(5, {{1, 4}, {1, 5}});
    CrownCheck chk = verify_crown(bad, {1, 2, 3}, {4, 5}, {{1, 2, 3}, {4, 5}}, 2, 0);
    CHECK_FALSE(chk.ok);
    CHECK(chk.reason.find("saturates") != std::string::npos);
    // The repair peels the violating branch and keeps the isolated W part.
    REQUIRE(chk.repaired.has_value());
    CHECK(chk.repaired->w_set == VertexSet{2, 3});
    CHECK(chk.repaired->h_set.empty());
}

TEST_CASE("hall repair finds a sub-crown") {
    // Heads {4,5} are reachable only through w = 1 (a Hall violation) while
    // the branch 2-6 is clean; vertex 3 pads the slack.
    Graph g(6, {{1, 4}, {1, 5}, {2, 6}});
    CrownCheck chk = verify_crown(g, {1, 2, 3}, {4, 5, 6}, {{1, 2, 3}, {4, 5, 6}}, 3, 0);
    CHECK_FALSE(chk.ok);
    REQUIRE(chk.repaired.has_value());
    CHECK(chk.repaired->w_set == VertexSet{2, 3});
    CHECK(chk.repaired->h_set == VertexSet{6});
    CHECK(verify_crown(g, {1, 2, 3}, {4, 5, 6}, *chk.repaired, 3, 0).ok);
}

TEST_CASE("clique to BCC structure") {
    Graph tri = complete(3);
    BccInstance bcc = reduce_clique_to_bcc(tri, 3);
    CHECK(bcc.graph.vertex_count() == 9);  // 3 + 3 + 3
    CHECK(bcc.d == 3);
    // A-side degrees: x's have degree 1, z's degree 2.
    for (int i = 1; i <= 3; ++i) CHECK(bcc.graph.degree(i) == 1);
    for (int e = 7; e <= 9; ++e) CHECK(bcc.graph.degree(e) == 2);

    // C4-freeness: no two B vertices share two common neighbors.
    for (int y1 : bcc.side_b)
        for (int y2 : bcc.side_b) {
            if (y1 >= y2) continue;
            int common = 0;
            for (int a : bcc.side_a)
                if (bcc.graph.has_edge(a, y1) && bcc.graph.has_edge(a, y2)) ++common;
            CHECK(common <= 1);
        }
}

TEST_CASE("K4 clique reduction carries the expected crown") {
    Graph k4 = complete(4);
    BccInstance bcc = reduce_clique_to_bcc(k4, 3);
    auto crown =
        find_constrained_crown_bruteforce(bcc.graph, bcc.side_a, bcc.side_b, bcc.k, bcc.d);
    REQUIRE(crown.has_value());
    CHECK(crown->crown.h_set.size() == 3);
    CHECK(crown->crown.w_set.size() == 6);  // 3 vertex copies + 3 edge vertices
}

TEST_CASE("clique iff constrained crown, exhaustively on small graphs") {
    SplitMix64 rng(61);
    for (int it = 0; it < 300; ++it) {
        int n = rng.range(2, 5);
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.chance(0.5)) e.emplace_back(u, v);
        Graph g(n, e);
        int k = rng.range(2, 4);
        BccInstance bcc = reduce_clique_to_bcc(g, k);
        bool clique = has_clique_bruteforce(g, k);
        bool crown =
            find_constrained_crown_bruteforce(bcc.graph, bcc.side_a, bcc.side_b, bcc.k, bcc.d)
                .has_value();
        REQUIRE(clique == crown);
    }
}

TEST_CASE("BCC to VCR construction and witness") {
    // |A|=2, |B|=2, t=1, d=1: k = 2+1+2 = 5, l = 4+6 = 10, biclique K_{2,2}.
    Graph g(4, {{1, 3}, {2, 4}});
    BccVcrReduction red = reduce_bcc_to_vcr(g, {1, 2}, {3, 4}, 1, 1);
    CHECK(red.instance.k == 5);
    CHECK(*red.instance.l == 10);
    CHECK(red.instance.g.vertex_count() == 8);
    CHECK(red.instance.s.size() == 4);  // |A| + d + t

    // A perfect-matching graph has the crown W=A, H=B for k=2, d=0; use a
    // crown with slack d=1: W={1,2}, H={3}? N({1,2}) = {3,4} so W must shrink.
    auto crown = find_constrained_crown_bruteforce(g, {1, 2}, {3, 4}, 1, 0);
    REQUIRE(crown.has_value());
    BccVcrReduction red2 = reduce_bcc_to_vcr(g, {1, 2}, {3, 4}, 1, 0);
    EditSequence w = bcc_vcr_witness(red2, crown->crown);
    TraceResult tr = trace(red2.instance.g, red2.instance.s, w);
    CHECK(tr.valid);
    CHECK(tr.final_set == red2.instance.t.members());
    CHECK(tr.cap <= red2.instance.k);
    CHECK(w.size() <= *red2.instance.l);
}

TEST_CASE("crown iff BCC-VCR yes-instance at desk scale") {
    SplitMix64 rng(67);
    for (int it = 0; it < 60; ++it) {
        int na = rng.range(1, 4), nb = rng.range(1, 4);
        int n = na + nb;
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u <= na; ++u)
            for (int v = na + 1; v <= n; ++v)
                if (rng.chance(0.5)) e.emplace_back(u, v);
        Graph g(n, e);
        VertexSet A, B;
        for (int v = 1; v <= na; ++v) A.push_back(v);
        for (int v = na + 1; v <= n; ++v) B.push_back(v);
        // The BCC problem takes positive k and d; d = 0 degenerates (the
        // biclique swap then fits the capacity with no crown needed).
        int t = rng.range(1, 2), d = rng.range(1, 2);

        auto crown = find_constrained_crown_bruteforce(g, A, B, t, d);
        BccVcrReduction red = reduce_bcc_to_vcr(g, A, B, t, d);
        SolveOutcome oracle_out = oracle::bfs_shortest(red.instance);
        bool vcr_yes = oracle_out.yes && *oracle_out.length <= *red.instance.l;
        REQUIRE(crown.has_value() == vcr_yes);
        if (crown) {
            EditSequence w = bcc_vcr_witness(red, crown->crown);
            CHECK(is_tight(red.instance.g, red.instance.s, w, red.instance.k));
        }
    }
}

TEST_CASE("compression to VCR") {
    Graph single(2, {{1, 2}});
    CompressionVcrReduction red =
        reduce_compression_to_vcr(single, VertexCover(single, {1, 2}), 2);
    CHECK(red.instance.g.vertex_count() == 6);  // n + 2k
    CHECK(red.instance.k == 5);                 // 3k - 1
    CHECK(*red.instance.l == 10);               // 6k - 2

    // Witness length is exactly 6k-2 when C and C' are disjoint.
    Graph p3(3, {{1, 2}, {2, 3}});
    CompressionVcrReduction red2 =
        reduce_compression_to_vcr(p3, VertexCover(p3, {1, 3}), 2);
    EditSequence w = compression_vcr_witness(red2, {2});
    CHECK(w.size() == 10);
    TraceResult tr = trace(red2.instance.g, red2.instance.s, w);
    CHECK(tr.valid);
    CHECK(tr.final_set == red2.instance.t.members());
    CHECK(tr.cap <= red2.instance.k);
}

TEST_CASE("compression iff VCR yes-instance at desk scale") {
    SplitMix64 rng(71);
    for (int it = 0; it < 60; ++it) {
        int n = rng.range(2, 6);
        std::vector<std::pair<int, int>> e;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.chance(0.5)) e.emplace_back(u, v);
        Graph g(n, e);
        int k = rng.range(1, 3);
        auto c = find_cover_of_size_bruteforce(g, k);
        if (!c) continue;
        CompressionVcrReduction red = reduce_compression_to_vcr(g, VertexCover(g, *c), k);
        bool smaller = find_cover_of_size_bruteforce(g, k - 1).has_value();
        SolveOutcome oracle_out = oracle::bfs_shortest(red.instance);
        bool vcr_yes = oracle_out.yes && *oracle_out.length <= *red.instance.l;
        REQUIRE(smaller == vcr_yes);
        if (smaller) {
            EditSequence w = compression_vcr_witness(red, *find_cover_of_size_bruteforce(g, k - 1));
            CHECK(is_tight(red.instance.g, red.instance.s, w, red.instance.k));
        }
    }
}

TEST_CASE("W_k structure") {
    for (int k = 4; k <= 5; ++k) {
        NecklaceGadget w = build_wk(k);
        CHECK(w.graph().vertex_count() == 6 * k * k);
        for (int v = 1; v <= w.graph().vertex_count(); ++v) CHECK(w.graph().degree(v) == 4);
        CHECK(w.s_cover().size() == 3 * k * k);
        CHECK(w.t_cover().size() == 3 * k * k);
        CHECK(removable_vertices(w.graph(), w.s_cover().members()).empty());
        CHECK(removable_vertices(w.graph(), w.t_cover().members()).empty());

        // All k^2 joining bicliques are vertex disjoint.
        VertexSet seen;
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) {
                auto [l1, l2] = w.lower_sequin_pair(i, j);
                auto [u1, u2] = w.upper_sequin_pair(j, i);
                for (int v : {l1, l2, u1, u2}) {
                    CHECK_FALSE(set_contains(seen, v));
                    set_insert(seen, v);
                }
                // The biclique edges exist.
                CHECK(w.graph().has_edge(l1, u1));
                CHECK(w.graph().has_edge(l1, u2));
                CHECK(w.graph().has_edge(l2, u1));
                CHECK(w.graph().has_edge(l2, u2));
            }
    }
    CHECK_THROWS_AS(build_wk(3), InvariantError);
}

TEST_CASE("W_k witness") {
    for (int k = 4; k <= 5; ++k) {
        NecklaceGadget w = build_wk(k);
        EditSequence seq = wk_witness_sequence(w);
        CHECK(seq.size() == 6 * k * k);
        for (auto [v, count] : seq.touch_counts()) CHECK(count == 1);
        TraceResult tr = trace(w.graph(), w.s_cover(), seq);
        REQUIRE(tr.valid);
        CHECK(tr.final_set == w.t_cover().members());
        CHECK(tr.cap <= 3 * k * k + k + 3);
    }
}

TEST_CASE("4-regular composition") {
    Graph k5 = complete(5);  // 4-regular
    VertexCover c(k5, {1, 2, 3, 4});
    FourRegularReduction red = reduce_compression_to_vcr_4regular(k5, c, 4);
    CHECK(classify(red.instance.g).four_regular);
    CHECK(red.instance.g.vertex_count() == 5 + 6 * 16);
    CHECK(red.instance.s.size() == 3 * 16 + 4);
    CHECK(red.instance.t.size() == 3 * 16 + 4);
    CHECK(red.instance.k == 3 * 16 + 4 + (4 + 3) - 1);
    CHECK(*red.instance.l == 6 * 16 + 4 * 4 - 2);

    // K5 has a 3-cover {1,2,3}? Edge {4,5} is uncovered, so no: K5's minimum
    // cover has 4 vertices and the composed instance is a NO. The witness
    // builder still traces when handed a (k-1)-cover of a graph that has one.
    CHECK_FALSE(find_cover_of_size_bruteforce(k5, 3).has_value());

    // C5 union C5 is 4-regular? No; use the 4-regular circulant C5(1,2) = K5.
    // For a YES case, take the 3-cube-like 4-regular graph K_{4,4}.
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= 4; ++u)
        for (int v = 5; v <= 8; ++v) e.emplace_back(u, v);
    Graph k44(8, e);
    VertexCover c44(k44, {1, 2, 3, 4});
    FourRegularReduction red2 = reduce_compression_to_vcr_4regular(k44, c44, 4);
    auto c3 = find_cover_of_size_bruteforce(k44, 3);
    CHECK_FALSE(c3.has_value());  // K_{4,4} needs 4 vertices

    // Take instead the disjoint union of two K_{4,4}... that is 4-regular and
    // k=8 with C = one full side of each; a 7-cover does not exist either.
    // Exercise the witness path via f_k large enough to make the wk sequence
    // feasible inside the composition:
    FourRegularReduction relaxed = reduce_compression_to_vcr_4regular(k44, c44, 4, 8);
    EditSequence w = four_regular_witness(relaxed, {5, 6, 7, 8});
    TraceResult tr = trace(relaxed.instance.g, relaxed.instance.s, w);
    CHECK(tr.valid);
    CHECK(tr.final_set == relaxed.instance.t.members());
}

TEST_CASE("desk-scale decision helpers") {
    Graph tri = complete(3);
    CHECK(has_clique_bruteforce(tri, 3));
    CHECK_FALSE(has_clique_bruteforce(cycle(4), 3));
    CHECK(find_cover_of_size_bruteforce(tri, 2).has_value());
    CHECK_FALSE(find_cover_of_size_bruteforce(tri, 1).has_value());
    CHECK(find_cover_of_size_bruteforce(Graph(3, {}), 0).has_value());
}
