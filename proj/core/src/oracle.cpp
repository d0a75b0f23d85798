#include "vcr/oracle.hpp"

#include <queue>
#include <unordered_map>

#include "vcr/rng.hpp"

namespace vcr {

ReconfigInstance::ReconfigInstance(Graph graph, VertexCover source, VertexCover target,
                                   int capacity, std::optional<int> length_bound)
    : g(std::move(graph)), s(std::move(source)), t(std::move(target)), k(capacity),
      l(length_bound) {
    if (s.size() > k || t.size() > k)
        throw InvariantError("cover sizes exceed the capacity bound k=" + std::to_string(k));
    if (l && *l < 0) throw InvariantError("length bound must be nonnegative");
}

namespace oracle {

namespace {

using Mask = std::uint32_t;

Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (int v : s) m |= Mask{1} << (v - 1);
    return m;
}

VertexSet from_mask(Mask m, int n) {
    VertexSet out;
    for (int v = 1; v <= n; ++v)
        if (m & (Mask{1} << (v - 1))) out.push_back(v);
    return out;
}

void check_scale(const Graph& g) {
    if (g.vertex_count() > kVertexLimit)
        throw TooLargeError("oracle refuses n=" + std::to_string(g.vertex_count()) + " > " +
                            std::to_string(kVertexLimit));
}

// Decide vertices in id order; a vertex with an excluded neighbor of smaller
// id is forced into the cover. Equivalent to branching on the endpoints of
// the lowest uncovered edge; visits every cover of size <= k exactly once.
struct CoverEnumerator {
    const Graph& g;
    int k;
    Mask frozen_mask;
    const std::function<void(const VertexSet&)>& visitor;
    std::uint64_t visited = 0;
    std::int64_t nodes = 0;

    void recurse(int v, Mask in, int in_count) {
        if (++nodes > kNodeLimit)
            throw TooLargeError("oracle node limit exceeded while enumerating covers");
        if (v > g.vertex_count()) {
            ++visited;
            visitor(from_mask(in, g.vertex_count()));
            return;
        }
        bool forced = false;
        if (frozen_mask & (Mask{1} << (v - 1))) forced = true;
        for (int u : g.neighbors(v)) {
            if (u > v) break;
            if (!(in & (Mask{1} << (u - 1)))) {
                forced = true;
                break;
            }
        }
        if (in_count < k) recurse(v + 1, in | (Mask{1} << (v - 1)), in_count + 1);
        if (!forced) recurse(v + 1, in, in_count);
    }
};

struct ReconfigGraph {
    int n = 0;
    int k = 0;
    std::vector<Mask> nodes;                    // cover masks, enumeration order
    std::unordered_map<Mask, int> index_of;
};

ReconfigGraph build_reconfig_graph(const Graph& g, int k, const VertexSet& frozen = {}) {
    check_scale(g);
    ReconfigGraph rg;
    rg.n = g.vertex_count();
    rg.k = k;
    enumerate_covers(
        g, k,
        [&](const VertexSet& cover) {
            Mask m = to_mask(cover);
            rg.index_of.emplace(m, static_cast<int>(rg.nodes.size()));
            rg.nodes.push_back(m);
        },
        frozen);
    return rg;
}

}  // namespace

std::uint64_t enumerate_covers(const Graph& g, int k,
                               const std::function<void(const VertexSet&)>& visitor,
                               const VertexSet& frozen) {
    check_scale(g);
    if (k < 0) return 0;
    CoverEnumerator en{g, k, to_mask(frozen), visitor};
    en.recurse(1, 0, 0);
    return en.visited;
}

SolveOutcome bfs_shortest(const ReconfigInstance& inst, const VertexSet& frozen) {
    const Graph& g = inst.g;
    if (!set_difference(frozen, set_intersection(inst.s.members(), inst.t.members())).empty())
        throw InvariantError("frozen vertices must belong to both covers");
    ReconfigGraph rg = build_reconfig_graph(g, inst.k, frozen);

    Mask start = to_mask(inst.s.members());
    Mask goal = to_mask(inst.t.members());
    auto sit = rg.index_of.find(start);
    auto git = rg.index_of.find(goal);
    if (sit == rg.index_of.end() || git == rg.index_of.end())
        throw InvariantError("source or target is not a node of the reconfiguration graph");

    std::vector<int> parent(rg.nodes.size(), -2);  // -2 unseen, -1 root
    std::queue<int> q;
    parent[static_cast<std::size_t>(sit->second)] = -1;
    q.push(sit->second);
    Mask frozen_mask = to_mask(frozen);

    while (!q.empty()) {
        int cur = q.front();
        q.pop();
        if (rg.nodes[static_cast<std::size_t>(cur)] == goal) break;
        Mask m = rg.nodes[static_cast<std::size_t>(cur)];
        // Flip vertices in ascending id order; first discovery wins, which
        // makes the reconstructed witness deterministic.
        for (int v = 1; v <= rg.n; ++v) {
            if (frozen_mask & (Mask{1} << (v - 1))) continue;
            Mask next = m ^ (Mask{1} << (v - 1));
            auto it = rg.index_of.find(next);
            if (it == rg.index_of.end()) continue;
            if (parent[static_cast<std::size_t>(it->second)] != -2) continue;
            parent[static_cast<std::size_t>(it->second)] = cur;
            q.push(it->second);
        }
    }

    SolveOutcome out;
    int goal_idx = git->second;
    if (parent[static_cast<std::size_t>(goal_idx)] == -2) {
        out.yes = false;
        out.reason = "target unreachable in R_VC(G,0," + std::to_string(inst.k) + ")";
        return out;
    }

    std::vector<Mask> path;
    for (int cur = goal_idx; cur != -1; cur = parent[static_cast<std::size_t>(cur)])
        path.push_back(rg.nodes[static_cast<std::size_t>(cur)]);
    std::reverse(path.begin(), path.end());

    std::vector<Marker> moves;
    for (std::size_t i = 1; i < path.size(); ++i) {
        Mask diff = path[i - 1] ^ path[i];
        int v = 1;
        while (!(diff & (Mask{1} << (v - 1)))) ++v;
        moves.push_back((path[i] & diff) ? Marker::add(v) : Marker::remove(v));
    }
    out.witness = EditSequence(std::move(moves));
    out.yes = true;
    out.length = static_cast<int>(path.size()) - 1;
    TraceResult tr = trace(g, inst.s, *out.witness);
    if (!tr.valid || tr.final_set != inst.t.members() || tr.cap > inst.k)
        throw InvariantError("oracle witness failed re-verification");
    out.cap = std::max(tr.cap, inst.s.size());
    out.reason = "reconfiguration-graph shortest path";
    return out;
}

ReconfigGraphStats stats(const Graph& g, int k) {
    ReconfigGraph rg = build_reconfig_graph(g, k);
    ReconfigGraphStats st;
    st.node_count = static_cast<std::int64_t>(rg.nodes.size());

    std::vector<std::vector<int>> adj(rg.nodes.size());
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
        Mask m = rg.nodes[i];
        for (int v = 1; v <= rg.n; ++v) {
            Mask next = m ^ (Mask{1} << (v - 1));
            auto it = rg.index_of.find(next);
            if (it == rg.index_of.end()) continue;
            if (next > m) ++st.edge_count;
            adj[i].push_back(it->second);
        }
    }

    // Diameter of a disconnected graph: maximum over its components.
    std::vector<int> dist(rg.nodes.size());
    for (std::size_t src = 0; src < rg.nodes.size(); ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(static_cast<int>(src));
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w)] != -1) continue;
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                st.diameter = std::max(st.diameter, dist[static_cast<std::size_t>(w)]);
                q.push(w);
            }
        }
    }
    return st;
}

EditSequence random_walk_harvest(const Graph& g, const VertexCover& s, int k, int steps,
                                 std::uint64_t seed) {
    if (s.size() > k) throw InvariantError("starting cover exceeds capacity");
    check_scale(g);
    SplitMix64 rng(seed);
    VertexSet cur = s.members();
    std::vector<Marker> moves;
    for (int step = 0; step < steps; ++step) {
        std::vector<Marker> legal;
        for (int v = 1; v <= g.vertex_count(); ++v) {
            if (set_contains(cur, v)) {
                bool ok = true;
                for (int u : g.neighbors(v))
                    if (!set_contains(cur, u)) {
                        ok = false;
                        break;
                    }
                if (ok) legal.push_back(Marker::remove(v));
            } else if (static_cast<int>(cur.size()) < k) {
                legal.push_back(Marker::add(v));
            }
        }
        if (legal.empty()) break;
        Marker m = legal[rng.below(legal.size())];
        if (m.is_add())
            set_insert(cur, m.label);
        else
            set_erase(cur, m.label);
        moves.push_back(m);
    }
    return EditSequence(std::move(moves));
}

}  // namespace oracle

}  // namespace vcr
