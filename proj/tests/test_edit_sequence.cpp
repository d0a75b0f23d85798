#include <map>

#include "doctest.h"
#include "vcr/edit_sequence.hpp"
#include "vcr/rng.hpp"

using namespace vcr;

namespace {

EditSequence seq(const std::string& text) { return parse_edit_sequence(text); }

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

}  // namespace

TEST_CASE("text format round trip") {
    EditSequence a = seq("+1 _ -4 + -");
    CHECK(a.size() == 5);
    CHECK(a.at(1) == Marker::add(1));
    CHECK(a.at(2) == Marker::blank());
    CHECK(a.at(3) == Marker::remove(4));
    CHECK(a.at(4) == Marker::add());
    CHECK(a.at(5) == Marker::remove());
    CHECK(parse_edit_sequence(format_edit_sequence(a)) == a);
    CHECK(seq("").empty());
    CHECK_THROWS_AS(seq("x"), ParseError);
    CHECK_THROWS_AS(seq("+0"), ParseError);
}

TEST_CASE("classification predicates") {
    CHECK(seq("+ - _").is_unlabeled());
    CHECK(seq("+1 -2").is_labeled());
    CHECK(seq("+1 -").is_partly_labeled());
    CHECK(seq("+1 _").is_partial());
    CHECK(seq("+1").is_full());
    CHECK(seq("_ _").blank_count() == 2);
    CHECK(seq("+1 -1 +2").touched() == VertexSet{1, 2});
}

TEST_CASE("concat, cut, clean") {
    EditSequence x = seq("+1 -1");
    CHECK(concat({}, x) == x);
    CHECK(concat(seq("+1"), seq("-1")) == seq("+1 -1"));

    SplitMix64 rng(3);
    for (int it = 0; it < 20; ++it) {
        std::vector<Marker> a, b;
        for (int i = rng.range(0, 5); i > 0; --i) a.push_back(Marker::add(rng.range(1, 9)));
        for (int i = rng.range(0, 5); i > 0; --i) b.push_back(Marker::remove(rng.range(1, 9)));
        CHECK(concat(EditSequence(a), EditSequence(b)).size() ==
              static_cast<int>(a.size() + b.size()));
    }

    CHECK(cut(seq("+1 -2 +3"), 2, 2) == seq("+1 +3"));
    EditSequence w = seq("+1 -2 +3 -4");
    CHECK(cut(w, 1, w.size()).empty());
    CHECK(cut(w, 1, 1) == seq("-2 +3 -4"));
    CHECK_THROWS_AS(cut(w, 0, 1), InvariantError);
    CHECK_THROWS_AS(cut(w, 3, 2), InvariantError);

    CHECK(clean(seq("+1 _ -2")) == seq("+1 -2"));
    CHECK(clean(seq("+1 -2")) == seq("+1 -2"));
    CHECK(clean(seq("_ _")).empty());
}

TEST_CASE("merge") {
    CHECK(merge(seq("_"), seq("+1")) == seq("+1"));
    CHECK(merge(seq("+1 _ _"), seq("-2 +3")) == seq("+1 -2 +3"));
    CHECK(merge(seq("+1 -1"), {}) == seq("+1 -1"));
    CHECK_THROWS_AS(merge(seq("_ _"), seq("+1")), InvariantError);
    CHECK_THROWS_AS(merge(seq("_"), seq("_")), InvariantError);

    // |merge(b, c)| = |b| and |clean(b)| + |c| = |merge(b, c)|.
    EditSequence b = seq("_ +4 _ -5 _");
    EditSequence c = seq("+1 +2 +3");
    CHECK(merge(b, c).size() == b.size());
    CHECK(clean(b).size() + c.size() == merge(b, c).size());
}

TEST_CASE("label_sequence") {
    CHECK(label_sequence(seq("+"), {5}) == seq("+5"));
    CHECK(label_sequence(seq("+ -"), {1, 1}) == seq("+1 -1"));
    EditSequence u = seq("+ - - +");
    EditSequence l = label_sequence(u, {2, 3, 2, 7});
    for (int p = 1; p <= u.size(); ++p) CHECK(l.at(p).kind == u.at(p).kind);
    CHECK_THROWS_AS(label_sequence(seq("+ -"), {1}), InvariantError);
    CHECK_THROWS_AS(label_sequence(seq("+1"), {1}), InvariantError);
}

TEST_CASE("mix enumeration") {
    auto count_mix = [](const std::vector<EditSequence>& in) {
        return mix_enumerate(in, [](const EditSequence&) { return true; });
    };
    CHECK(count_mix({seq("+1"), seq("+2")}) == 2);
    CHECK(count_mix({seq("+1 -1"), seq("+2")}) == 3);
    CHECK(count_mix({seq("+1 -1"), seq("+2 -2"), seq("+3")}) == 30);  // 5!/(2!2!1!)

    // Projection: dropping all other inputs' markers recovers each input.
    std::vector<EditSequence> in{seq("+1 -1"), seq("+2 +3")};
    mix_enumerate(in, [&](const EditSequence& m) {
        for (std::size_t i = 0; i < in.size(); ++i) {
            std::vector<Marker> kept;
            for (const Marker& mk : m.markers()) {
                for (const Marker& own : in[i].markers())
                    if (mk == own) {
                        kept.push_back(mk);
                        break;
                    }
            }
            // Inputs here have disjoint labels, so the filter is exact.
            CHECK(EditSequence(kept) == in[i]);
        }
        return true;
    });

    // Early termination stops the whole enumeration.
    int seen = 0;
    mix_enumerate({seq("+1"), seq("+2")}, [&](const EditSequence&) {
        ++seen;
        return false;
    });
    CHECK(seen == 1);
}

TEST_CASE("trace") {
    Graph p3 = path(3);
    VertexCover s13(p3, {1, 3});

    TraceResult r = trace(p3, s13, seq("+2 -1 -3"));
    CHECK(r.valid);
    CHECK(r.prefix_sizes == std::vector<int>{3, 2, 1});
    CHECK(r.cap == 3);
    CHECK(r.final_set == VertexSet{2});

    TraceResult bad = trace(p3, s13, seq("-1"));
    CHECK_FALSE(bad.valid);
    CHECK(bad.failure_position == 1);

    TraceResult eps = trace(p3, s13, {});
    CHECK(eps.valid);
    CHECK(eps.cap == 2);
    CHECK(eps.final_set == VertexSet{1, 3});

    // Strict semantics: adding a present vertex / removing an absent one.
    CHECK_FALSE(trace(p3, s13, seq("+1")).valid);
    CHECK_FALSE(trace(p3, s13, seq("-2")).valid);

    // Prefix sizes move by exactly one per position.
    SplitMix64 rng(5);
    for (int it = 0; it < 30; ++it) {
        std::vector<Marker> mk;
        for (int i = rng.range(1, 6); i > 0; --i)
            mk.push_back(rng.chance(0.5) ? Marker::add(rng.range(1, 3))
                                         : Marker::remove(rng.range(1, 3)));
        EditSequence a{mk};
        TraceResult t = trace(p3, s13, a);
        int prev = 2;
        for (int sz : t.prefix_sizes) {
            CHECK(std::abs(sz - prev) == 1);
            prev = sz;
        }
        if (t.valid) {
            int adds = 0, rems = 0;
            for (const Marker& m : a.markers()) (m.is_add() ? adds : rems)++;
            CHECK(static_cast<int>(t.final_set.size()) == 2 + adds - rems);
        }
    }

    CHECK(is_tight(p3, s13, seq("+2 -1 -3"), 3));
    CHECK_FALSE(is_tight(p3, s13, seq("+2 -1 -3"), 2));
}

TEST_CASE("d-well-formed decomposition") {
    CHECK(is_d_well_formed(seq("-1 +2 -3 +4"), 1));
    auto dec = decompose_d_well_formed(seq("-1 +2 -3 +4"), 1);
    CHECK(dec.starting_len == 1);
    CHECK(dec.segments.size() == 1);
    CHECK(dec.segments[0].add_start == 2);
    CHECK(dec.segments[0].remove_start == 3);
    CHECK(dec.ending_start == 4);
    CHECK(dec.ending_len == 1);

    CHECK_FALSE(is_d_well_formed(seq("+1 +2 +3 -4"), 2));
    CHECK(is_d_well_formed(seq("+1 +2 +3 -4"), 3));
    CHECK(is_d_well_formed({}, 1));
    CHECK(is_d_well_formed(seq("- - - -"), 1));
    CHECK(is_d_well_formed(seq("+ + +"), 1));
    CHECK_FALSE(is_d_well_formed(seq("+ - -"), 1));
    CHECK(is_d_well_formed(seq("+ - -"), 2));
    CHECK_THROWS_AS(is_d_well_formed(seq("_"), 1), InvariantError);
    CHECK_THROWS_AS(is_d_well_formed(seq("+"), 0), InvariantError);
}

TEST_CASE("non-separation condition") {
    Graph p3 = path(3);
    VertexCover s13(p3, {1, 3});
    // r1 cannot occur before a2: removing 1 first uncovers {1,2}.
    CHECK(satisfies_non_separation(p3, s13, seq("+2 -1"), 2));

    Graph two(2, {});
    VertexCover s1(two, {1});
    CHECK_FALSE(satisfies_non_separation(two, s1, seq("+2 -1"), 2));

    CHECK_FALSE(satisfies_non_separation(p3, s13, seq("-1 +2"), 1));  // vacuous at p=1
    CHECK_THROWS_AS(satisfies_non_separation(p3, s13, seq("+2 -1"), 1), InvariantError);
}

TEST_CASE("unlabeled enumeration counts") {
    auto count = [](int l, bool partial) {
        return enumerate_unlabeled(l, partial,
                                   [](const EditSequence&) { return EnumVerdict::descend; });
    };
    CHECK(count(1, false) == 2);
    CHECK(count(2, false) == 6);
    CHECK(count(3, true) == 39);
    for (int l = 1; l <= 8; ++l) {
        CHECK(count(l, false) == (std::uint64_t{1} << (l + 1)) - 2);
        std::uint64_t p3 = 1;
        for (int i = 0; i < l + 1; ++i) p3 *= 3;
        CHECK(count(l, true) == (p3 - 3) / 2);
    }
}

TEST_CASE("labeled enumeration over a pool") {
    std::vector<EditSequence> seen;
    enumerate_labeled_over({1}, 1, false, [&](const EditSequence& s) {
        seen.push_back(s);
        return EnumVerdict::descend;
    });
    CHECK(seen.size() == 2);
    CHECK(seen[0] == seq("+1"));
    CHECK(seen[1] == seq("-1"));

    // Pool size 2, length exactly 2: 16 sequences of that length.
    int exact2 = 0;
    enumerate_labeled_over({4, 7}, 2, false, [&](const EditSequence& s) {
        if (s.size() == 2) ++exact2;
        return EnumVerdict::descend;
    });
    CHECK(exact2 == 16);

    // Pruning on the first marker removes the whole subtree.
    std::uint64_t visited = enumerate_labeled_over({1, 2}, 3, false, [&](const EditSequence& s) {
        if (s.size() == 1 && s.at(1) == Marker::add(1)) return EnumVerdict::skip_children;
        return EnumVerdict::descend;
    });
    std::uint64_t full = enumerate_labeled_over({1, 2}, 3, false, [&](const EditSequence&) {
        return EnumVerdict::descend;
    });
    CHECK(full == 4 + 16 + 64);
    CHECK(visited == full - (4 + 16));  // the +1 subtree kept its root only

    // Budget errors instead of hangs.
    Budget tiny{10, 0};
    CHECK_THROWS_AS(enumerate_labeled_over({1, 2, 3}, 4, true,
                                           [](const EditSequence&) { return EnumVerdict::descend; },
                                           &tiny),
                    BudgetError);
}
