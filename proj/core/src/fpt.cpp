#include "vcr/fpt.hpp"

#include <queue>
#include <set>

namespace vcr {

VertexSet LayerDecomposition::c_at(int i) const {
    if (i < 1 || i >= static_cast<int>(c_by_dist.size())) return {};
    return c_by_dist[static_cast<std::size_t>(i)];
}

VertexSet LayerDecomposition::o_at(int i) const {
    if (i < 2 || i >= static_cast<int>(o_by_dist.size())) return {};
    return o_by_dist[static_cast<std::size_t>(i)];
}

LayerDecomposition decompose_layers(const Graph& g, const VertexCover& s, const VertexCover& t) {
    DiffPartition part = diff_partition(g, s, t);
    VertexSet delta = set_union(part.s_r, part.t_a);

    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    std::queue<int> q;
    for (int v : delta) {
        dist[static_cast<std::size_t>(v)] = 0;
        q.push(v);
    }
    int max_dist = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] != -1) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
            max_dist = std::max(max_dist, dist[static_cast<std::size_t>(w)]);
            q.push(w);
        }
    }

    LayerDecomposition out;
    out.c_by_dist.assign(static_cast<std::size_t>(max_dist) + 1, {});
    out.o_by_dist.assign(static_cast<std::size_t>(max_dist) + 1, {});
    for (int v = 1; v <= g.vertex_count(); ++v) {
        int dv = dist[static_cast<std::size_t>(v)];
        if (set_contains(part.c_st, v)) {
            if (dv == -1)
                out.c_inf.push_back(v);
            else if (dv >= 1)
                out.c_by_dist[static_cast<std::size_t>(dv)].push_back(v);
        } else if (set_contains(part.o_st, v)) {
            if (dv == -1)
                out.o_inf.push_back(v);
            else if (dv == 1)
                throw InvariantError("O_ST vertex adjacent to the difference contradicts covers");
            else
                out.o_by_dist[static_cast<std::size_t>(dv)].push_back(v);
        }
    }

    // O_i vertices may only see C_{i-1} ∪ C_i ∪ C_{i+1}.
    for (int i = 2; i <= max_dist; ++i)
        for (int v : out.o_at(i))
            for (int u : g.neighbors(v)) {
                int du = dist[static_cast<std::size_t>(u)];
                if (!set_contains(part.c_st, u) || du < i - 1 || du > i + 1)
                    throw InvariantError("layer decomposition neighbor containment violated");
            }
    return out;
}

std::vector<AvcrInstance> make_avcr_instances(const ReconfigInstance& inst, int d) {
    if (!inst.l) throw InvariantError("AVCR decomposition needs a length bound");
    const int l = *inst.l;
    const Graph& g = inst.g;
    LayerDecomposition layers = decompose_layers(g, inst.s, inst.t);
    DiffPartition part = diff_partition(g, inst.s, inst.t);
    VertexSet delta = set_union(part.s_r, part.t_a);
    VertexSet all;
    for (int v = 1; v <= g.vertex_count(); ++v) all.push_back(v);

    std::vector<AvcrInstance> out;
    for (int x = 1; x <= 2 * l; ++x) {
        AvcrInstance a;
        a.g = &g;
        a.s = inst.s;
        a.t = inst.t;
        a.k = inst.k;
        a.l = l;
        a.d = d;
        a.layer = x;
        if (x == 1) {
            a.x_set = delta;
            a.w_set = layers.c_at(1);
        } else {
            a.x_set = delta;
            for (int j = 1; j < x; ++j) a.x_set = set_union(a.x_set, layers.c_at(j));
            for (int j = 2; j <= x; ++j) a.x_set = set_union(a.x_set, layers.o_at(j));
            a.w_set = set_union(layers.c_at(x), layers.c_at(x + 1));
        }
        a.r_set = set_difference(set_difference(all, a.x_set), a.w_set);

        if (!separated(g, a.x_set, a.r_set))
            throw InvariantError("AVCR instance: X and R are not separated");
        if (!set_difference(delta, a.x_set).empty())
            throw InvariantError("AVCR instance: difference not contained in X");
        if (!set_difference(a.w_set, part.c_st).empty())
            throw InvariantError("AVCR instance: wall not contained in C_ST");
        double bound = static_cast<double>(delta.size());
        for (int e = 0; e < x + 1; ++e) bound *= std::max(2, d);
        if (static_cast<double>(a.x_set.size()) > bound)
            throw InvariantError("AVCR instance: |X| exceeds the ball-growth bound");
        out.push_back(std::move(a));
    }
    return out;
}

std::uint64_t ramsey_bound(int p, int q) {
    if (p < 1 || q < 1) throw InvariantError("ramsey_bound needs positive arguments");
    // C(p+q-2, q-1), overflow-guarded via 128-bit intermediates.
    int n = p + q - 2, r = q - 1;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX))
            throw TooLargeError("ramsey_bound overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

bool independent_in(const Graph& g, const VertexSet& chosen, int v) {
    for (int u : g.neighbors(v))
        if (set_contains(chosen, u)) return false;
    return true;
}

bool exact_is_search(const Graph& g, const VertexSet& pool, std::size_t idx, int need,
                     VertexSet& chosen, Budget* budget) {
    if (need == 0) return true;
    if (pool.size() - idx < static_cast<std::size_t>(need)) return false;
    if (budget) budget->charge();
    int v = pool[idx];
    if (independent_in(g, chosen, v)) {
        chosen.push_back(v);
        if (exact_is_search(g, pool, idx + 1, need - 1, chosen, budget)) return true;
        chosen.pop_back();
    }
    return exact_is_search(g, pool, idx + 1, need, chosen, budget);
}

}  // namespace

std::optional<VertexSet> find_independent_set(const Graph& g, const VertexSet& within, int size,
                                              Budget* budget) {
    if (size < 0) throw InvariantError("negative independent-set size");
    if (size == 0) return VertexSet{};

    // Greedy: take the lowest id, discard its closed neighborhood.
    VertexSet rest = within, greedy;
    while (!rest.empty() && static_cast<int>(greedy.size()) < size) {
        int v = rest.front();
        greedy.push_back(v);
        VertexSet drop{v};
        for (int u : g.neighbors(v)) drop.push_back(u);
        rest = set_difference(rest, make_set(std::move(drop)));
    }
    if (static_cast<int>(greedy.size()) >= size) return greedy;

    VertexSet chosen;
    if (exact_is_search(g, within, 0, size, chosen, budget)) return make_set(std::move(chosen));
    return std::nullopt;
}

int AuxGraph::cross_color_degree_bound() const {
    std::vector<std::vector<int>> per_vertex(vertices.size());
    for (auto [u, v] : edges) {
        per_vertex[static_cast<std::size_t>(u) - 1].push_back(v);
        per_vertex[static_cast<std::size_t>(v) - 1].push_back(u);
    }
    int bound = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::vector<int> per_color;
        for (int nb : per_vertex[i]) {
            int c = vertices[static_cast<std::size_t>(nb) - 1].color;
            if (static_cast<int>(per_color.size()) < c) per_color.resize(static_cast<std::size_t>(c), 0);
            ++per_color[static_cast<std::size_t>(c) - 1];
        }
        for (int cnt : per_color) bound = std::max(bound, cnt);
    }
    return bound;
}

AuxGraph const_aux_graph(const Graph& g, const VertexCover& s,
                         const std::vector<EditSequence>& pieces, int d, Budget& budget) {
    if (pieces.empty()) throw InvariantError("aux graph needs at least one piece");
    AuxGraph aux;
    std::set<std::pair<int, std::string>> seen;  // (color, formatted sequence)
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const EditSequence& piece = pieces[i];
        if (piece.empty()) throw InvariantError("aux graph pieces must be nonempty");
        for (int center = 1; center <= g.vertex_count(); ++center) {
            VertexSet pool = ball(g, center, piece.size());
            enumerate_labeled_over(
                pool, piece.size(), false,
                [&](const EditSequence& lambda) {
                    // Kinds are pinned positionally by the piece.
                    if (lambda.at(lambda.size()).kind !=
                        piece.at(lambda.size()).kind)
                        return EnumVerdict::skip_children;
                    if (lambda.size() < piece.size()) return EnumVerdict::descend;
                    VertexSet touched = lambda.touched();
                    if (connected_components(g, touched).size() != 1)
                        return EnumVerdict::skip_children;
                    if (!is_nice(g, s, lambda, d)) return EnumVerdict::skip_children;
                    auto key = std::make_pair(static_cast<int>(i) + 1,
                                              format_edit_sequence(lambda));
                    if (seen.insert(key).second)
                        aux.vertices.push_back(
                            {center, static_cast<int>(i) + 1, lambda});
                    return EnumVerdict::skip_children;
                },
                &budget);
        }
    }
    for (std::size_t a = 0; a < aux.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < aux.vertices.size(); ++b) {
            if (aux.vertices[a].color == aux.vertices[b].color) continue;
            budget.charge();
            if (!separated(g, aux.vertices[a].seq.touched(), aux.vertices[b].seq.touched()))
                aux.edges.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
        }
    return aux;
}

ColoredGraph to_colored_graph(const AuxGraph& aux) {
    ColoredGraph cg;
    cg.graph = Graph(static_cast<int>(aux.vertices.size()), aux.edges);
    cg.color.assign(aux.vertices.size() + 1, 0);
    for (std::size_t i = 0; i < aux.vertices.size(); ++i)
        cg.color[i + 1] = aux.vertices[i].color;
    return cg;
}

int ColoredGraph::color_count() const {
    int c = 0;
    for (std::size_t v = 1; v < color.size(); ++v) c = std::max(c, color[v]);
    return c;
}

namespace {

struct MisSearcher {
    const ColoredGraph& cg;
    int d_prime;
    int y;
    Budget& budget;

    std::optional<VertexSet> run() {
        std::vector<VertexSet> classes(static_cast<std::size_t>(y));
        for (int v = 1; v <= cg.graph.vertex_count(); ++v) {
            int c = cg.color[static_cast<std::size_t>(v)];
            if (c >= 1 && c <= y) classes[static_cast<std::size_t>(c) - 1].push_back(v);
        }
        std::vector<char> fixed(static_cast<std::size_t>(y), 0);
        return recurse(classes, fixed);
    }

    std::optional<VertexSet> recurse(std::vector<VertexSet> classes, std::vector<char> fixed) {
        budget.charge();
        int threshold = d_prime * y;
        int pick = -1;
        for (int i = 0; i < y; ++i) {
            if (fixed[static_cast<std::size_t>(i)]) continue;
            if (classes[static_cast<std::size_t>(i)].empty()) return std::nullopt;
            if (static_cast<int>(classes[static_cast<std::size_t>(i)].size()) <= threshold &&
                (pick == -1 || classes[static_cast<std::size_t>(i)].size() <
                                   classes[static_cast<std::size_t>(pick)].size()))
                pick = i;
        }
        if (pick != -1) {
            // Branch on every vertex of the small class; fixing one deletes
            // its neighbors from the remaining classes.
            for (int v : classes[static_cast<std::size_t>(pick)]) {
                auto next = classes;
                auto nfixed = fixed;
                next[static_cast<std::size_t>(pick)] = {v};
                nfixed[static_cast<std::size_t>(pick)] = 1;
                for (int i = 0; i < y; ++i) {
                    if (nfixed[static_cast<std::size_t>(i)]) continue;
                    VertexSet kept;
                    for (int u : next[static_cast<std::size_t>(i)])
                        if (!cg.graph.has_edge(u, v)) kept.push_back(u);
                    next[static_cast<std::size_t>(i)] = std::move(kept);
                }
                if (auto r = recurse(std::move(next), std::move(nfixed))) return r;
            }
            return std::nullopt;
        }
        // Every open class is larger than d_prime * y: truncate and exhaust.
        for (int i = 0; i < y; ++i) {
            if (fixed[static_cast<std::size_t>(i)]) continue;
            if (static_cast<int>(classes[static_cast<std::size_t>(i)].size()) > threshold + 1)
                classes[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(threshold) + 1);
        }
        VertexSet chosen;
        if (exhaust(classes, fixed, 0, chosen)) return make_set(std::move(chosen));
        return std::nullopt;
    }

    bool exhaust(const std::vector<VertexSet>& classes, const std::vector<char>& fixed,
                 int idx, VertexSet& chosen) {
        if (idx == y) return true;
        budget.charge();
        for (int v : classes[static_cast<std::size_t>(idx)]) {
            bool ok = true;
            for (int u : chosen)
                if (cg.graph.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(v);
            if (exhaust(classes, fixed, idx + 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<VertexSet> multicolored_is(const ColoredGraph& cg, int y, int d_prime,
                                         Budget& budget) {
    if (y > cg.color_count())
        throw InvariantError("requested independent-set size exceeds the color count");
    if (y < 1) throw InvariantError("multicolored_is needs y >= 1");
    MisSearcher searcher{cg, std::max(1, d_prime), y, budget};
    auto result = searcher.run();
    if (result) {
        std::set<int> colors;
        for (int v : *result) {
            colors.insert(cg.color[static_cast<std::size_t>(v)]);
            for (int u : *result)
                if (u != v && cg.graph.has_edge(u, v))
                    throw InvariantError("multicolored IS is not independent");
        }
        if (static_cast<int>(colors.size()) != y)
            throw InvariantError("multicolored IS is not rainbow");
    }
    return result;
}

namespace {

void apply_marker(VertexSet& cover, const Marker& m) {
    if (m.is_add())
        set_insert(cover, m.label);
    else
        set_erase(cover, m.label);
}

// Restricted growth strings: partitions of t segments into exactly y ordered
// groups, canonical up to group renaming.
void enumerate_partitions(int t, int y, std::vector<int>& assign,
                          const std::function<bool(const std::vector<int>&)>& visitor,
                          int pos, int used, bool& stop) {
    if (stop) return;
    if (pos == t) {
        if (used == y && !visitor(assign)) stop = true;
        return;
    }
    for (int grp = 0; grp <= std::min(used, y - 1); ++grp) {
        assign[static_cast<std::size_t>(pos)] = grp;
        enumerate_partitions(t, y, assign, visitor, pos + 1, std::max(used, grp + 1), stop);
    }
}

// Independent subsets of `pool` of exactly `size` elements, ascending.
void enumerate_independent_subsets(const Graph& g, const VertexSet& pool, int size,
                                   std::size_t idx, VertexSet& chosen,
                                   const std::function<bool(const VertexSet&)>& visitor,
                                   bool& stop, Budget& budget) {
    if (stop) return;
    if (static_cast<int>(chosen.size()) == size) {
        if (!visitor(chosen)) stop = true;
        return;
    }
    if (pool.size() - idx < static_cast<std::size_t>(size) - chosen.size()) return;
    budget.charge();
    int v = pool[idx];
    if (independent_in(g, chosen, v)) {
        chosen.push_back(v);
        enumerate_independent_subsets(g, pool, size, idx + 1, chosen, visitor, stop, budget);
        chosen.pop_back();
    }
    enumerate_independent_subsets(g, pool, size, idx + 1, chosen, visitor, stop, budget);
}

std::vector<MarkerKind> kinds_of(const EditSequence& a) {
    std::vector<MarkerKind> out;
    for (const Marker& m : a.markers()) out.push_back(m.kind);
    return out;
}

}  // namespace

std::optional<EditSequence> solve_vcw(const Graph& g, const VertexCover& s,
                                      const EditSequence& gamma, int d, Budget& budget) {
    if (gamma.empty()) return EditSequence{};
    WellFormedDecomposition dec = decompose_d_well_formed(gamma, d);
    if (!dec.well_formed) throw InvariantError("solve_vcw requires a d-well-formed sequence");

    EditSequence gamma_s = gamma.segment(1, dec.starting_len);
    int central_begin = dec.starting_len + 1;
    int central_end = dec.ending_start == 0 ? gamma.size() : dec.ending_start - 1;
    EditSequence gamma_c = gamma.segment(central_begin, central_end);
    EditSequence gamma_e =
        dec.ending_start == 0 ? EditSequence{}
                              : gamma.segment(dec.ending_start, gamma.size());
    int t = static_cast<int>(dec.segments.size());

    // Vertices of S with no neighbor outside S are the only removable labels
    // for the starting piece.
    VertexSet s_prime = removable_vertices(g, s.members());

    std::optional<EditSequence> found;
    bool stop = false;
    VertexSet chosen;
    enumerate_independent_subsets(
        g, s_prime, gamma_s.size(), 0, chosen,
        [&](const VertexSet& labels) {
            EditSequence gs = label_sequence(gamma_s, labels);
            VertexSet after = s.members();
            for (const Marker& m : gs.markers()) apply_marker(after, m);
            VertexCover s2(g, after);

            auto try_central = [&](const EditSequence& gc) -> bool {
                // The ending piece re-adds the odd-touched vertices (the walk
                // heads back toward S); its slot count must match when gamma
                // has an ending piece at all.
                EditSequence prefix = concat(gs, gc);
                VertexSet fin = s.members();
                for (const Marker& m : prefix.markers()) apply_marker(fin, m);
                VertexSet missing = set_difference(s.members(), fin);
                if (!gamma_e.empty() &&
                    static_cast<int>(missing.size()) != gamma_e.size())
                    return false;
                EditSequence ge =
                    gamma_e.empty() ? EditSequence{} : label_sequence(gamma_e, missing);
                EditSequence full = concat(prefix, ge);
                if (!full.is_labeled() || !is_nice(g, s, full, d)) return false;
                found = full;
                return true;
            };

            if (t == 0) {
                if (try_central({})) return false;
                return true;
            }

            for (int y = 1; y <= t && !found; ++y) {
                std::vector<int> assign(static_cast<std::size_t>(t));
                bool inner_stop = false;
                enumerate_partitions(
                    t, y, assign,
                    [&](const std::vector<int>& map) {
                        budget.charge();
                        std::vector<EditSequence> pieces(static_cast<std::size_t>(y));
                        for (int seg = 0; seg < t; ++seg) {
                            const AddRemoveSegment& ar = dec.segments[static_cast<std::size_t>(seg)];
                            pieces[static_cast<std::size_t>(map[static_cast<std::size_t>(seg)])] =
                                concat(pieces[static_cast<std::size_t>(
                                           map[static_cast<std::size_t>(seg)])],
                                       gamma.segment(ar.begin(), ar.end()));
                        }
                        AuxGraph aux = const_aux_graph(g, s2, pieces, d, budget);
                        ColoredGraph cg = to_colored_graph(aux);
                        if (cg.color_count() < y) return true;
                        auto mis = multicolored_is(cg, y, aux.cross_color_degree_bound(), budget);
                        if (!mis) return true;
                        std::vector<EditSequence> seqs;
                        for (int v : *mis)
                            seqs.push_back(aux.vertices[static_cast<std::size_t>(v) - 1].seq);
                        std::vector<MarkerKind> want = kinds_of(gamma_c);
                        mix_enumerate(seqs, [&](const EditSequence& lambda) {
                            budget.charge();
                            if (kinds_of(lambda) != want) return true;
                            if (!is_nice(g, s2, lambda, d)) return true;
                            if (try_central(lambda)) return false;
                            return true;
                        });
                        return !found;
                    },
                    0, 0, inner_stop);
            }
            return !found;
        },
        stop, budget);
    return found;
}

namespace {

// Depth-first enumeration of partial labeled sequences over X that keeps an
// incremental cover state, so only prefixes with a valid cleaned trace are
// ever visited.
struct AvcrSearcher {
    const AvcrInstance& a;
    const Graph& g;
    Budget& budget;
    VertexSet o_st;

    VertexSet cur;     // cover after the cleaned prefix
    int cap = 0;
    std::vector<Marker> prefix;
    std::optional<EditSequence> witness;

    AvcrSearcher(const AvcrInstance& inst, Budget& b)
        : a(inst), g(*inst.g), budget(b) {
        DiffPartition part = diff_partition(g, a.s, a.t);
        o_st = part.o_st;
        cur = a.s.members();
        cap = a.s.size();
    }

    bool removable_now(int v) const {
        if (!set_contains(cur, v)) return false;
        for (int u : g.neighbors(v))
            if (!set_contains(cur, u)) return false;
        return true;
    }

    int distance_to_target() const {
        return static_cast<int>(set_symmetric_difference(cur, a.t.members()).size());
    }

    // True once a witness is set (stop everything).
    bool found() const { return witness.has_value(); }

    void consider_candidate() {
        if (cur != a.t.members()) return;
        EditSequence beta{prefix};
        EditSequence cleaned = clean(beta);
        if (cap <= a.k) {  // tight: done
            witness = cleaned;
            return;
        }
        int c = cap - a.k;
        if (c > a.l) return;

        // Borrow capacity from R: remove an independent set with no O_ST
        // neighbors, run the sequence, add the set back.
        VertexSet s_r_pool;
        for (int v : set_intersection(a.s.members(), a.r_set)) {
            bool clean_nbrs = true;
            for (int u : g.neighbors(v))
                if (set_contains(o_st, u)) {
                    clean_nbrs = false;
                    break;
                }
            if (clean_nbrs) s_r_pool.push_back(v);
        }
        if (static_cast<std::uint64_t>(s_r_pool.size()) >
            ramsey_bound(a.d + 2, c)) {
            auto is = find_independent_set(g, s_r_pool, c, &budget);
            if (is && cleaned.size() + 2 * c <= a.l) {
                std::vector<Marker> removals, adds;
                for (int v : *is) removals.push_back(Marker::remove(v));
                for (int v : *is) adds.push_back(Marker::add(v));
                EditSequence candidate =
                    concat(concat(EditSequence(removals), cleaned), EditSequence(adds));
                if (is_tight(g, a.s, candidate, a.k)) {
                    TraceResult tr = trace(g, a.s, candidate);
                    if (tr.final_set == a.t.members()) {
                        witness = candidate;
                        return;
                    }
                }
            }
        }

        int blanks = beta.blank_count();
        if (blanks == 0) return;
        InducedSubgraph sub = induced_subgraph(g, a.r_set);
        VertexSet local_cover;
        for (int i = 1; i <= sub.graph.vertex_count(); ++i)
            if (set_contains(a.s.members(), sub.to_original[static_cast<std::size_t>(i)]))
                local_cover.push_back(i);
        VertexCover sr(sub.graph, local_cover);

        enumerate_unlabeled(
            blanks, false,
            [&](const EditSequence& gamma) {
                if (gamma.size() < blanks) return EnumVerdict::descend;
                if (!is_d_well_formed(gamma, a.d)) return EnumVerdict::skip_children;
                auto local = solve_vcw(sub.graph, sr, gamma, a.d, budget);
                if (!local) return EnumVerdict::skip_children;
                // Map back to original vertex ids.
                std::vector<Marker> mapped;
                for (const Marker& m : local->markers())
                    mapped.push_back({m.kind, sub.to_original[static_cast<std::size_t>(m.label)]});
                EditSequence filling{mapped};
                for (auto [v, count] : filling.touch_counts())
                    if (count % 2 == 1) return EnumVerdict::skip_children;
                EditSequence merged = merge(beta, filling);
                if (is_tight(g, a.s, merged, a.k)) {
                    TraceResult tr = trace(g, a.s, merged);
                    if (tr.final_set == a.t.members()) {
                        witness = merged;
                        return EnumVerdict::stop;
                    }
                }
                return EnumVerdict::skip_children;
            },
            &budget);
    }

    void search() {
        consider_candidate();
        if (found()) return;
        if (static_cast<int>(prefix.size()) >= a.l) return;
        int remaining = a.l - static_cast<int>(prefix.size());
        if (distance_to_target() > remaining) return;
        budget.charge();

        // Blank first, then additions, then removals, ids ascending.
        prefix.push_back(Marker::blank());
        search();
        prefix.pop_back();
        if (found()) return;

        for (int v : a.x_set) {
            if (set_contains(cur, v)) continue;
            if (cap + 1 - a.k > a.l) continue;
            prefix.push_back(Marker::add(v));
            set_insert(cur, v);
            int old_cap = cap;
            cap = std::max(cap, static_cast<int>(cur.size()));
            search();
            cap = old_cap;
            set_erase(cur, v);
            prefix.pop_back();
            if (found()) return;
        }
        for (int v : a.x_set) {
            if (!removable_now(v)) continue;
            prefix.push_back(Marker::remove(v));
            set_erase(cur, v);
            search();
            set_insert(cur, v);
            prefix.pop_back();
            if (found()) return;
        }
    }
};

}  // namespace

SolveOutcome solve_avcr(const AvcrInstance& a, Budget& budget) {
    SolveOutcome out;
    if (a.s.members() == a.t.members()) {
        out.yes = true;
        out.witness = EditSequence{};
        out.length = 0;
        out.cap = a.s.size();
        out.reason = "S equals T";
        return out;
    }
    AvcrSearcher searcher(a, budget);
    searcher.search();
    if (!searcher.witness) {
        out.yes = false;
        out.reason = "no tight sequence over X with a feasible filling (layer " +
                     std::to_string(a.layer) + ")";
        return out;
    }
    TraceResult tr = trace(*a.g, a.s, *searcher.witness);
    if (!tr.valid || tr.final_set != a.t.members() || tr.cap > a.k ||
        searcher.witness->size() > a.l)
        throw InvariantError("AVCR witness failed re-verification");
    out.yes = true;
    out.length = searcher.witness->size();
    out.cap = std::max(tr.cap, a.s.size());
    out.witness = std::move(searcher.witness);
    out.reason = "annotated instance (layer " + std::to_string(a.layer) + ")";
    return out;
}

SolveOutcome solve_fpt(const ReconfigInstance& inst, Budget& budget,
                       std::optional<int> d_override) {
    if (!inst.l) throw InvariantError("solve_fpt needs a length bound l");
    int actual = inst.g.max_degree();
    int d = std::max(1, actual);
    if (d_override) {
        if (*d_override < actual)
            throw InvariantError("degree override below the graph's max degree");
        d = *d_override;
    }

    if (inst.s.members() == inst.t.members()) {
        SolveOutcome out;
        out.yes = true;
        out.witness = EditSequence{};
        out.length = 0;
        out.cap = inst.s.size();
        out.reason = "S equals T";
        return out;
    }
    int delta =
        static_cast<int>(set_symmetric_difference(inst.s.members(), inst.t.members()).size());
    if (delta > *inst.l) {
        SolveOutcome out;
        out.yes = false;
        out.reason = "every difference vertex needs a touch: |S delta T| > l";
        return out;
    }

    for (const AvcrInstance& a : make_avcr_instances(inst, d)) {
        SolveOutcome out = solve_avcr(a, budget);
        if (out.yes) {
            if (!is_tight(inst.g, inst.s, *out.witness, inst.k))
                throw InvariantError("FPT witness is not tight");
            return out;
        }
    }
    SolveOutcome out;
    out.yes = false;
    out.reason = "all " + std::to_string(2 * *inst.l) + " annotated instances answered NO";
    return out;
}

}  // namespace vcr
