#include "vcr/reductions.hpp"

#include <functional>
#include <queue>

namespace vcr {

namespace {

void require_bipartition(const Graph& g, const VertexSet& side_a, const VertexSet& side_b) {
    VertexSet all;
    for (int v = 1; v <= g.vertex_count(); ++v) all.push_back(v);
    if (set_union(side_a, side_b) != all || !set_intersection(side_a, side_b).empty())
        throw InvariantError("sides do not partition the vertex set");
    for (const VertexSet* side : {&side_a, &side_b})
        for (int u : *side)
            for (int v : g.neighbors(u))
                if (set_contains(*side, v))
                    throw InvariantError("side is not an independent set");
}

int index_in(const VertexSet& s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) throw InvariantError("vertex not on the expected side");
    return static_cast<int>(it - s.begin()) + 1;
}

}  // namespace

CrownCheck verify_crown(const Graph& g, const VertexSet& side_a, const VertexSet& side_b,
                        const Crown& crown, int k, int d) {
    CrownCheck out;
    if (crown.w_set.empty()) {
        out.reason = "W is empty";
        return out;
    }
    if (!set_difference(crown.w_set, side_a).empty() ||
        !set_difference(crown.h_set, side_b).empty()) {
        out.reason = "crown is not aligned with the bipartition";
        return out;
    }
    for (int u : crown.w_set)
        for (int v : g.neighbors(u))
            if (set_contains(crown.w_set, v)) {
                out.reason = "W is not independent";
                return out;
            }
    VertexSet nbrs;
    for (int u : crown.w_set)
        for (int v : g.neighbors(u)) nbrs.push_back(v);
    if (make_set(std::move(nbrs)) != crown.h_set) {
        out.reason = "N(W) differs from H";
        return out;
    }
    if (static_cast<int>(crown.h_set.size()) > k) {
        out.reason = "head exceeds k";
        return out;
    }
    if (d < 0 || static_cast<int>(crown.w_set.size()) - static_cast<int>(crown.h_set.size()) < d) {
        out.reason = "slack |W|-|H| below d";
        return out;
    }

    Matching m = max_bipartite_matching(g, crown.w_set, crown.h_set);
    if (m.size() == static_cast<int>(crown.h_set.size())) {
        out.ok = true;
        return out;
    }
    out.reason = "no matching saturates H";

    // Hall repair: peel the violating alternating-reachable subgraph and try
    // again on the remaining pair.
    Crown cur = crown;
    while (!cur.w_set.empty()) {
        Matching mm = max_bipartite_matching(g, cur.w_set, cur.h_set);
        if (mm.size() == static_cast<int>(cur.h_set.size())) break;
        std::vector<int> match_of(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
        for (auto [w, h] : mm.edges) {
            match_of[static_cast<std::size_t>(w)] = h;
            match_of[static_cast<std::size_t>(h)] = w;
        }
        // Alternating BFS from the unsaturated heads.
        VertexSet zone;
        std::queue<std::pair<int, bool>> q;  // (vertex, on H side)
        for (int h : cur.h_set)
            if (match_of[static_cast<std::size_t>(h)] == 0) {
                q.push({h, true});
                set_insert(zone, h);
            }
        while (!q.empty()) {
            auto [v, on_h] = q.front();
            q.pop();
            if (on_h) {
                for (int w : g.neighbors(v)) {
                    if (!set_contains(cur.w_set, w) || set_contains(zone, w)) continue;
                    set_insert(zone, w);
                    q.push({w, false});
                }
            } else if (int h = match_of[static_cast<std::size_t>(v)]; h != 0) {
                if (!set_contains(zone, h)) {
                    set_insert(zone, h);
                    q.push({h, true});
                }
            }
        }
        cur.w_set = set_difference(cur.w_set, zone);
        cur.h_set = set_difference(cur.h_set, zone);
        // H must stay exactly N(W).
        VertexSet nw;
        for (int u : cur.w_set)
            for (int v : g.neighbors(u)) nw.push_back(v);
        cur.h_set = make_set(std::move(nw));
    }
    if (!cur.w_set.empty()) {
        CrownCheck again = verify_crown(g, side_a, side_b, cur, k, d);
        if (again.ok) out.repaired = cur;
    }
    return out;
}

std::optional<ConstrainedCrown> find_constrained_crown_bruteforce(const Graph& g,
                                                                  const VertexSet& side_a,
                                                                  const VertexSet& side_b, int k,
                                                                  int d) {
    require_bipartition(g, side_a, side_b);
    if (side_b.size() > 20)
        throw TooLargeError("crown brute force refuses |B| > 20");
    if (d < 0 || k < 0) throw InvariantError("crown parameters must be nonnegative");

    int kb = std::min<int>(k, static_cast<int>(side_b.size()));
    std::optional<ConstrainedCrown> found;
    auto try_head = [&](const VertexSet& head) {
        // Maximal W for this head: every A-vertex whose neighborhood fits.
        VertexSet w;
        for (int a : side_a) {
            bool inside = true;
            for (int v : g.neighbors(a))
                if (!set_contains(head, v)) {
                    inside = false;
                    break;
                }
            if (inside) w.push_back(a);
        }
        Crown candidate{w, head};
        if (!w.empty() && verify_crown(g, side_a, side_b, candidate, k, d).ok) {
            found = ConstrainedCrown{candidate, k, d};
            return true;
        }
        return false;
    };

    // Heads in increasing size order, ties lexicographic.
    for (int sz = 0; sz <= kb && !found; ++sz) {
        std::function<bool(std::size_t, VertexSet&, int)> by_size =
            [&](std::size_t idx, VertexSet& head, int want) -> bool {
            if (want == 0) return try_head(head);
            for (std::size_t i = idx; i + static_cast<std::size_t>(want) <= side_b.size(); ++i) {
                head.push_back(side_b[i]);
                if (by_size(i + 1, head, want - 1)) return true;
                head.pop_back();
            }
            return false;
        };
        VertexSet head;
        by_size(0, head, sz);
    }
    return found;
}

BccInstance reduce_clique_to_bcc(const Graph& g, int k) {
    if (k < 2) throw InvariantError("clique reduction needs k >= 2");
    int n = g.vertex_count();
    int m = g.edge_count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(i, n + i);  // x_i - y_i
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        edges.emplace_back(n + u, 2 * n + e + 1);
        edges.emplace_back(n + v, 2 * n + e + 1);
    }
    BccInstance out;
    out.graph = Graph(2 * n + m, edges);
    for (int i = 1; i <= n; ++i) out.side_a.push_back(i);
    for (int e = 1; e <= m; ++e) out.side_a.push_back(2 * n + e);
    for (int i = 1; i <= n; ++i) out.side_b.push_back(n + i);
    out.side_a = make_set(std::move(out.side_a));
    out.k = k;
    out.d = k * (k - 1) / 2;
    out.n_orig = n;
    return out;
}

BccVcrReduction reduce_bcc_to_vcr(const Graph& g, const VertexSet& side_a,
                                  const VertexSet& side_b, int t, int d) {
    require_bipartition(g, side_a, side_b);
    if (t < 0 || d < 0) throw InvariantError("t and d must be nonnegative");
    int a = static_cast<int>(side_a.size());
    int b = static_cast<int>(side_b.size());
    int clique = d + t;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int au = set_contains(side_a, u) ? u : v;
        int bv = au == u ? v : u;
        edges.emplace_back(index_in(side_a, au), a + index_in(side_b, bv));
    }
    for (int i = 1; i <= clique; ++i)
        for (int j = 1; j <= clique; ++j)
            edges.emplace_back(a + b + i, a + b + clique + j);

    Graph gp(a + b + 2 * clique, edges);
    VertexSet s, tt;
    for (int i = 1; i <= a; ++i) {
        s.push_back(i);
        tt.push_back(i);
    }
    for (int i = 1; i <= clique; ++i) {
        s.push_back(a + b + i);
        tt.push_back(a + b + clique + i);
    }
    BccVcrReduction out{ReconfigInstance(gp, VertexCover(gp, make_set(std::move(s))),
                                         VertexCover(gp, make_set(std::move(tt))),
                                         a + d + 2 * t, 4 * d + 6 * t),
                        a, b, t, d, side_a, side_b};
    return out;
}

EditSequence bcc_vcr_witness(const BccVcrReduction& red, const Crown& crown) {
    const int a = red.a_size, b = red.b_size, clique = red.d + red.t;
    // The crown lives on the input bipartite graph; its vertices map to the
    // x/y positions of their sides.
    std::vector<Marker> moves;
    std::vector<int> head_ys, removed_xs;
    for (int h : crown.h_set) head_ys.push_back(index_in(red.orig_side_b, h));
    int need = red.d + static_cast<int>(crown.h_set.size());
    for (int w : crown.w_set) {
        if (static_cast<int>(removed_xs.size()) == need) break;
        removed_xs.push_back(index_in(red.orig_side_a, w));
    }
    if (static_cast<int>(removed_xs.size()) != need)
        throw InvariantError("crown too small for the witness construction");

    for (int y : head_ys) moves.push_back(Marker::add(a + y));
    for (int x : removed_xs) moves.push_back(Marker::remove(x));
    for (int i = 1; i <= clique; ++i) moves.push_back(Marker::add(a + b + clique + i));
    for (int i = 1; i <= clique; ++i) moves.push_back(Marker::remove(a + b + i));
    for (int x : removed_xs) moves.push_back(Marker::add(x));
    for (int y : head_ys) moves.push_back(Marker::remove(a + y));
    return EditSequence(std::move(moves));
}

CompressionVcrReduction reduce_compression_to_vcr(const Graph& g, const VertexCover& c, int k) {
    if (c.size() != k || k < 1)
        throw InvariantError("compression reduction needs |C| = k >= 1");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) edges.emplace_back(n + i, n + k + j);
    Graph gp(n + 2 * k, edges);
    VertexSet s = c.members(), t = c.members();
    for (int i = 1; i <= k; ++i) {
        s.push_back(n + i);
        t.push_back(n + k + i);
    }
    return {ReconfigInstance(gp, VertexCover(gp, make_set(std::move(s))),
                             VertexCover(gp, make_set(std::move(t))), 3 * k - 1, 6 * k - 2),
            n, k};
}

namespace {

EditSequence cover_swap_witness(const VertexSet& from_cover, const VertexSet& to_cover,
                                const EditSequence& middle) {
    std::vector<Marker> moves;
    for (int v : set_difference(to_cover, from_cover)) moves.push_back(Marker::add(v));
    for (int v : set_difference(from_cover, to_cover)) moves.push_back(Marker::remove(v));
    for (const Marker& m : middle.markers()) moves.push_back(m);
    for (int v : set_difference(from_cover, to_cover)) moves.push_back(Marker::add(v));
    for (int v : set_difference(to_cover, from_cover)) moves.push_back(Marker::remove(v));
    return EditSequence(std::move(moves));
}

}  // namespace

EditSequence compression_vcr_witness(const CompressionVcrReduction& red,
                                     const VertexSet& c_prime) {
    std::vector<Marker> middle;
    for (int i = 1; i <= red.k; ++i) middle.push_back(Marker::add(red.n + red.k + i));
    for (int i = 1; i <= red.k; ++i) middle.push_back(Marker::remove(red.n + i));
    VertexSet c;
    for (int v : red.instance.s.members())
        if (v <= red.n) c.push_back(v);
    return cover_swap_witness(c, c_prime, EditSequence(std::move(middle)));
}

NecklaceGadget::NecklaceGadget(int k) : k_(k) {
    if (k < 4) throw InvariantError("the necklace gadget needs k >= 4");
    std::vector<std::pair<int, int>> edges;
    auto necklace_edges = [&](bool lower, int i) {
        for (int j = 1; j <= k; ++j) {
            int next_bead = j == k ? 1 : j + 1;
            auto [p1, p2] = sequin(lower, i, j);
            int bj = necklace_base(lower, i) + j;
            int bn = necklace_base(lower, i) + next_bead;
            edges.emplace_back(std::min(bj, p1), std::max(bj, p1));
            edges.emplace_back(std::min(bj, p2), std::max(bj, p2));
            edges.emplace_back(std::min(bn, p1), std::max(bn, p1));
            edges.emplace_back(std::min(bn, p2), std::max(bn, p2));
        }
    };
    for (int i = 1; i <= k; ++i) necklace_edges(false, i);
    for (int i = 1; i <= k; ++i) necklace_edges(true, i);
    // Joining bicliques: p^l_{i,j} with p^u_{j,i}.
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            auto [l1, l2] = sequin(true, i, j);
            auto [u1, u2] = sequin(false, j, i);
            for (int lv : {l1, l2})
                for (int uv : {u1, u2}) edges.emplace_back(std::min(lv, uv), std::max(lv, uv));
        }
    graph_ = Graph(6 * k * k, edges);

    VertexSet s, t;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            s.push_back(upper_bead(i, j));
            t.push_back(lower_bead(i, j));
            auto [l1, l2] = lower_sequin_pair(i, j);
            auto [u1, u2] = upper_sequin_pair(i, j);
            s.push_back(l1);
            s.push_back(l2);
            t.push_back(u1);
            t.push_back(u2);
        }
    s_ = VertexCover(graph_, make_set(std::move(s)));
    t_ = VertexCover(graph_, make_set(std::move(t)));

    for (int v = 1; v <= graph_.vertex_count(); ++v)
        if (graph_.degree(v) != 4)
            throw InvariantError("necklace gadget vertex of degree != 4");
}

NecklaceGadget build_wk(int k) { return NecklaceGadget(k); }

EditSequence wk_witness_sequence(const NecklaceGadget& gadget) {
    const int k = gadget.k();
    std::vector<Marker> moves;
    auto add_pair = [&](std::pair<int, int> p) {
        moves.push_back(Marker::add(p.first));
        moves.push_back(Marker::add(p.second));
    };
    auto remove_pair = [&](std::pair<int, int> p) {
        moves.push_back(Marker::remove(p.first));
        moves.push_back(Marker::remove(p.second));
    };

    // (1) all beads of L_1.
    for (int j = 1; j <= k; ++j) moves.push_back(Marker::add(gadget.lower_bead(1, j)));
    // (2)-(3) swap the sequin pairs joined with L_1.
    for (int i = 1; i <= k; ++i) {
        add_pair(gadget.upper_sequin_pair(i, 1));
        remove_pair(gadget.lower_sequin_pair(1, i));
    }
    // (4)-(8) process the remaining lower necklaces.
    for (int c = 2; c <= k; ++c) {
        for (int m = 1; m <= k; ++m) {
            add_pair(gadget.upper_sequin_pair(m, c));
            moves.push_back(Marker::remove(gadget.upper_bead(m, c)));
            if (m == 1) moves.push_back(Marker::add(gadget.lower_bead(c, 1)));
            if (m < k) moves.push_back(Marker::add(gadget.lower_bead(c, m + 1)));
            remove_pair(gadget.lower_sequin_pair(c, m));
        }
    }
    // The first-column upper beads become removable once their second sequin
    // pair (added while processing L_k) is in place.
    for (int m = 1; m <= k; ++m) moves.push_back(Marker::remove(gadget.upper_bead(m, 1)));
    return EditSequence(std::move(moves));
}

FourRegularReduction reduce_compression_to_vcr_4regular(const Graph& g, const VertexCover& c,
                                                        int k, std::optional<int> f_k) {
    if (!classify(g).four_regular)
        throw InvariantError("the 4-regular reduction needs a 4-regular input");
    if (c.size() != k) throw InvariantError("the 4-regular reduction needs |C| = k");
    int fk = f_k.value_or(k + 3);
    int n = g.vertex_count();
    NecklaceGadget gadget = build_wk(k);

    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : gadget.graph().edges()) edges.emplace_back(n + u, n + v);
    Graph gp(n + gadget.graph().vertex_count(), edges);

    VertexSet s = c.members(), t = c.members();
    for (int v : gadget.s_cover().members()) s.push_back(n + v);
    for (int v : gadget.t_cover().members()) t.push_back(n + v);
    int capacity = 3 * k * k + k + fk - 1;
    int length = 6 * k * k + 4 * k - 2;
    return {ReconfigInstance(gp, VertexCover(gp, make_set(std::move(s))),
                             VertexCover(gp, make_set(std::move(t))), capacity, length),
            std::move(gadget), n, k, fk};
}

EditSequence four_regular_witness(const FourRegularReduction& red, const VertexSet& c_prime) {
    std::vector<Marker> middle;
    EditSequence wk = wk_witness_sequence(red.gadget);
    for (const Marker& m : wk.markers()) middle.push_back({m.kind, m.label + red.n});
    VertexSet c;
    for (int v : red.instance.s.members())
        if (v <= red.n) c.push_back(v);
    return cover_swap_witness(c, c_prime, EditSequence(std::move(middle)));
}

bool has_clique_bruteforce(const Graph& g, int size) {
    if (size <= 1) return g.vertex_count() >= size;
    VertexSet chosen;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(chosen.size()) == size) return true;
        for (int v = from; v <= g.vertex_count(); ++v) {
            bool ok = true;
            for (int u : chosen)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            if (rec(v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(1);
}

std::optional<VertexSet> find_cover_of_size_bruteforce(const Graph& g, int size) {
    if (size < 0) return std::nullopt;
    std::optional<VertexSet> found;
    // Decide vertices in order; an excluded vertex forces its later neighbors.
    std::function<bool(int, VertexSet&)> rec = [&](int v, VertexSet& in) -> bool {
        if (static_cast<int>(in.size()) > size) return false;
        if (v > g.vertex_count()) {
            VertexSet padded = in;
            for (int u = 1; u <= g.vertex_count() &&
                            static_cast<int>(padded.size()) < size;
                 ++u)
                if (!set_contains(padded, u)) set_insert(padded, u);
            if (static_cast<int>(padded.size()) != size) return false;
            found = padded;
            return true;
        }
        bool forced = false;
        for (int u : g.neighbors(v)) {
            if (u > v) break;
            if (!set_contains(in, u)) {
                forced = true;
                break;
            }
        }
        in.push_back(v);
        if (rec(v + 1, in)) return true;
        in.pop_back();
        if (!forced && rec(v + 1, in)) return true;
        return false;
    };
    VertexSet in;
    rec(1, in);
    return found;
}

}  // namespace vcr
