#include "vcr/generators.hpp"

namespace vcr {

namespace {

std::vector<std::pair<int, int>> random_tree_edges(int n, SplitMix64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(rng.range(1, v - 1), v);
    return edges;
}

Graph gen_tree(const GenSpec& spec, SplitMix64& rng) {
    return Graph(spec.n, random_tree_edges(spec.n, rng));
}

// Random tree spine with disjoint cycles attached through single shared
// vertices, which keeps every block an edge or a cycle by construction.
Graph gen_cactus(const GenSpec& spec, SplitMix64& rng) {
    int n = spec.n;
    int want_cycles = spec.cycle_count ? *spec.cycle_count
                                       : (n >= 3 ? rng.range(0, (n - 1) / 2) : 0);
    if (want_cycles < 0 || (want_cycles > 0 && n < 1 + 2 * want_cycles))
        throw InvariantError("cycle_count " + std::to_string(want_cycles) +
                             " is infeasible for n=" + std::to_string(n));

    // Each cycle of length L consumes L-1 new vertices beyond its anchor.
    std::vector<int> lengths(static_cast<std::size_t>(want_cycles), 3);
    int spare = n - 1 - 2 * want_cycles;
    for (int& len : lengths) {
        int extra = std::min(spare, rng.range(0, 3));
        len += extra;
        spare -= extra;
    }
    int spine = n;
    for (int len : lengths) spine -= len - 1;

    std::vector<std::pair<int, int>> edges = random_tree_edges(spine, rng);
    int next = spine + 1;
    for (int len : lengths) {
        int anchor = rng.range(1, spine);
        std::vector<int> cyc{anchor};
        for (int i = 1; i < len; ++i) cyc.push_back(next++);
        for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
            edges.emplace_back(std::min(cyc[i], cyc[i + 1]), std::max(cyc[i], cyc[i + 1]));
        edges.emplace_back(std::min(cyc.front(), cyc.back()), std::max(cyc.front(), cyc.back()));
    }
    return Graph(n, edges);
}

Graph gen_bounded_degree(const GenSpec& spec, SplitMix64& rng) {
    int n = spec.n;
    int d = spec.degree_bound.value_or(3);
    if (d < 0) throw InvariantError("negative degree bound");
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> edges;
    auto present = [&](int u, int v) {
        for (auto [a, b] : edges)
            if (a == u && b == v) return true;
        return false;
    };
    int target = n >= 2 ? rng.range(n / 2, std::max(n / 2, n * d / 3)) : 0;
    int tries = 8 * n * (d + 1);
    while (target > 0 && tries-- > 0) {
        int u = rng.range(1, n), v = rng.range(1, n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (deg[u] >= d || deg[v] >= d || present(u, v)) continue;
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
        --target;
    }
    return Graph(n, edges);
}

Graph gen_bipartite(const GenSpec& spec, SplitMix64& rng) {
    int n = spec.n;
    int left = n >= 2 ? rng.range(1, n - 1) : n;
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= left; ++u)
        for (int v = left + 1; v <= n; ++v)
            if (rng.chance(0.4)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

Graph gen_graph(const GenSpec& spec) {
    if (spec.n < 1) throw InvariantError("generator needs n >= 1");
    SplitMix64 rng(spec.seed);
    Graph g;
    switch (spec.family) {
        case GraphFamily::tree: g = gen_tree(spec, rng); break;
        case GraphFamily::cactus: g = gen_cactus(spec, rng); break;
        case GraphFamily::bounded_degree: g = gen_bounded_degree(spec, rng); break;
        case GraphFamily::bipartite: g = gen_bipartite(spec, rng); break;
    }
    GraphClass c = classify(g);
    switch (spec.family) {
        case GraphFamily::tree:
            if (!c.tree) throw InvariantError("generator produced a non-tree");
            break;
        case GraphFamily::cactus:
            if (!c.cactus) throw InvariantError("generator produced a non-cactus");
            if (spec.cycle_count &&
                static_cast<int>(cycle_blocks(g).size()) != *spec.cycle_count)
                throw InvariantError("generator missed the requested cycle count");
            break;
        case GraphFamily::bounded_degree:
            if (c.max_degree > spec.degree_bound.value_or(3))
                throw InvariantError("generator exceeded the degree bound");
            break;
        case GraphFamily::bipartite:
            if (!c.bipartite) throw InvariantError("generator produced a non-bipartite graph");
            break;
    }
    return g;
}

std::pair<VertexCover, VertexCover> gen_cover_pair(const Graph& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    auto greedy = [&]() {
        VertexSet cover;
        auto edges = g.edges();
        for (std::size_t i = edges.size(); i > 1; --i)
            std::swap(edges[i - 1], edges[rng.below(i)]);
        for (auto [u, v] : edges) {
            if (set_contains(cover, u) || set_contains(cover, v)) continue;
            set_insert(cover, rng.chance(0.5) ? u : v);
        }
        return cover;
    };
    VertexSet a = greedy();
    VertexSet b = greedy();
    // Local perturbation: occasionally add a vertex or drop a removable one.
    for (int round = 0; round < g.vertex_count(); ++round) {
        if (rng.chance(0.3) && g.vertex_count() > 0) {
            int v = rng.range(1, g.vertex_count());
            if (!set_contains(b, v)) set_insert(b, v);
        }
        if (rng.chance(0.3)) {
            VertexSet rem = removable_vertices(g, b);
            if (!rem.empty()) set_erase(b, rem[rng.below(rem.size())]);
        }
    }
    return {VertexCover(g, a), VertexCover(g, b)};
}

GraphFamily parse_family(const std::string& name) {
    if (name == "tree") return GraphFamily::tree;
    if (name == "cactus") return GraphFamily::cactus;
    if (name == "bounded_degree" || name == "bounded-degree") return GraphFamily::bounded_degree;
    if (name == "bipartite") return GraphFamily::bipartite;
    throw ParseError("unknown graph family '" + name + "'");
}

}  // namespace vcr
