#include "vcr/graph.hpp"

#include <fstream>
#include <functional>
#include <queue>
#include <sstream>

namespace vcr {

std::string format_vertex_set(const VertexSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
    }
    return out;
}

VertexSet parse_vertex_set(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> v;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t pos = 0;
            int id = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            v.push_back(id);
        } catch (const std::exception&) {
            throw ParseError("bad vertex id '" + tok + "' in vertex set");
        }
    }
    return make_set(std::move(v));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw InvariantError("vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw InvariantError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") out of range 1.." + std::to_string(n));
        if (u == v) throw InvariantError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (set_contains(adj_[u], v))
            throw InvariantError("duplicate edge (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
        set_insert(adj_[u], v);
        set_insert(adj_[v], u);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    m_ = static_cast<int>(edges_.size());
}

const VertexSet& Graph::neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (!valid_vertex(u) || !valid_vertex(v)) return false;
    return set_contains(adj_[u], v);
}

void Graph::require_vertex(int v) const {
    if (!valid_vertex(v))
        throw InvariantError("vertex " + std::to_string(v) + " out of range 1.." +
                             std::to_string(n_));
}

Graph load_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw ParseError("empty graph input");
    std::istringstream hs(header);
    int n = 0, m = 0;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'n m'");
    std::string extra;
    if (hs >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::string el;
        if (!next_data_line(el))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream es(el);
        int u = 0, v = 0;
        if (!(es >> u >> v))
            throw ParseError("line " + std::to_string(lineno) + ": expected edge 'u v'");
        if (es >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        if (!(1 <= u && u < v && v <= n))
            throw ParseError("line " + std::to_string(lineno) + ": edge (" + std::to_string(u) +
                             "," + std::to_string(v) + ") violates 1 <= u < v <= n");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, edges);
    } catch (const InvariantError& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

Graph load_graph_text(const std::string& text) {
    std::istringstream in(text);
    return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return load_graph(in);
}

std::string format_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    for (int v : s) g.require_vertex(v);
    for (auto [u, v] : g.edges())
        if (!set_contains(s, u) && !set_contains(s, v)) return false;
    return true;
}

VertexCover::VertexCover(const Graph& g, VertexSet members) : members_(std::move(members)) {
    if (!std::is_sorted(members_.begin(), members_.end()) ||
        std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        members_ = make_set(members_);
    if (!is_vertex_cover(g, members_))
        throw InvariantError("set {" + format_vertex_set(members_) + "} is not a vertex cover");
}

DiffPartition diff_partition(const Graph& g, const VertexCover& s, const VertexCover& t) {
    DiffPartition p;
    p.c_st = set_intersection(s.members(), t.members());
    p.s_r = set_difference(s.members(), t.members());
    p.t_a = set_difference(t.members(), s.members());
    VertexSet all;
    for (int v = 1; v <= g.vertex_count(); ++v) all.push_back(v);
    p.o_st = set_difference(all, set_union(s.members(), t.members()));

    // G[S_R ∪ T_A] is bipartite with sides S_R, T_A and has no edges to O_ST.
    for (int u : p.s_r)
        for (int v : g.neighbors(u))
            if (set_contains(p.s_r, v))
                throw InvariantError("edge inside S_R contradicts cover property");
    for (int u : p.t_a)
        for (int v : g.neighbors(u))
            if (set_contains(p.t_a, v))
                throw InvariantError("edge inside T_A contradicts cover property");
    for (int u : p.o_st)
        for (int v : g.neighbors(u))
            if (set_contains(p.s_r, v) || set_contains(p.t_a, v) || set_contains(p.o_st, v))
                throw InvariantError("edge between O_ST and S_R ∪ T_A ∪ O_ST contradicts covers");
    return p;
}

VertexSet ball(const Graph& g, int center, int radius) {
    g.require_vertex(center);
    if (radius < 0) throw InvariantError("negative ball radius");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    std::queue<int> q;
    dist[center] = 0;
    q.push(center);
    VertexSet out{center};
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] == radius) continue;
        for (int v : g.neighbors(u)) {
            if (dist[v] != -1) continue;
            dist[v] = dist[u] + 1;
            out.push_back(v);
            q.push(v);
        }
    }
    return make_set(std::move(out));
}

VertexSet ball_of_set(const Graph& g, const VertexSet& a, int radius) {
    if (radius < 0) throw InvariantError("negative ball radius");
    if (a.empty()) return {};
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    std::queue<int> q;
    VertexSet out;
    for (int v : a) {
        g.require_vertex(v);
        dist[v] = 0;
        out.push_back(v);
        q.push(v);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] == radius) continue;
        for (int v : g.neighbors(u)) {
            if (dist[v] != -1) continue;
            dist[v] = dist[u] + 1;
            out.push_back(v);
            q.push(v);
        }
    }
    return make_set(std::move(out));
}

VertexSet Matching::vertices() const {
    std::vector<int> v;
    for (auto [a, b] : edges) {
        v.push_back(a);
        v.push_back(b);
    }
    return make_set(std::move(v));
}

Matching maximal_matching(const Graph& g) {
    Matching m;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (auto [u, v] : g.edges()) {
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        m.edges.emplace_back(u, v);
    }
    return m;
}

Matching max_bipartite_matching(const Graph& g, const VertexSet& left, const VertexSet& right) {
    for (int u : left)
        for (int v : g.neighbors(u))
            if (set_contains(left, v)) throw InvariantError("left side is not independent");
    for (int u : right)
        for (int v : g.neighbors(u))
            if (set_contains(right, v)) throw InvariantError("right side is not independent");

    std::vector<int> match_of(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()) + 1, 0);

    std::function<bool(int)> augment = [&](int u) -> bool {
        for (int v : g.neighbors(u)) {
            if (!set_contains(right, v) || visited[v]) continue;
            visited[v] = 1;
            if (match_of[v] == 0 || augment(match_of[v])) {
                match_of[v] = u;
                return true;
            }
        }
        return false;
    };

    for (int u : left) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(u);
    }

    Matching m;
    for (int v : right)
        if (match_of[v] != 0) m.edges.emplace_back(match_of[v], v);
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

namespace {

// Biconnected components via the standard DFS edge-stack algorithm.
struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int counter = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph),
          num(static_cast<std::size_t>(graph.vertex_count()) + 1, 0),
          low(static_cast<std::size_t>(graph.vertex_count()) + 1, 0) {}

    void pop_block(std::pair<int, int> until) {
        std::vector<std::pair<int, int>> block;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until) break;
        }
        blocks.push_back(std::move(block));
    }

    void run(int root) {
        // Iterative DFS; frames hold (vertex, parent, neighbor index).
        struct Frame {
            int v, parent;
            std::size_t idx;
        };
        std::vector<Frame> stack;
        num[root] = low[root] = ++counter;
        stack.push_back({root, 0, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const VertexSet& nb = g.neighbors(f.v);
            if (f.idx < nb.size()) {
                int w = nb[f.idx++];
                if (w == f.parent) continue;
                if (num[w] == 0) {
                    edge_stack.push_back({f.v, w});
                    num[w] = low[w] = ++counter;
                    stack.push_back({w, f.v, 0});
                } else if (num[w] < num[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent != 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= num[parent]) pop_block({parent, v});
                }
            }
        }
    }

    void run_all() {
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (num[v] == 0) run(v);
    }
};

bool two_colorable(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
    for (int s = 1; s <= g.vertex_count(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

GraphClass classify(const Graph& g) {
    GraphClass c;
    c.max_degree = g.max_degree();
    VertexSet all;
    for (int v = 1; v <= g.vertex_count(); ++v) all.push_back(v);
    auto comps = connected_components(g, all);
    c.connected = comps.size() <= 1;
    c.forest = g.edge_count() == g.vertex_count() - static_cast<int>(comps.size());
    c.tree = c.connected && c.forest;
    c.bipartite = two_colorable(g);
    c.four_regular = g.vertex_count() > 0 && c.max_degree == 4;
    if (c.four_regular)
        for (int v = 1; v <= g.vertex_count() && c.four_regular; ++v)
            if (g.degree(v) != 4) c.four_regular = false;

    // A block with b > 2 vertices is a valid cactus block iff it has exactly b
    // edges (an induced cycle); two-vertex blocks are single edges.
    c.cactus = true;
    BlockFinder bf(g);
    bf.run_all();
    for (const auto& block : bf.blocks) {
        std::vector<int> verts;
        for (auto [u, v] : block) {
            verts.push_back(u);
            verts.push_back(v);
        }
        auto vs = make_set(std::move(verts));
        if (block.size() == 1) continue;  // bridge
        if (block.size() != vs.size()) {
            c.cactus = false;
            break;
        }
    }
    return c;
}

std::vector<VertexSet> cycle_blocks(const Graph& g) {
    BlockFinder bf(g);
    bf.run_all();
    std::vector<VertexSet> cycles;
    for (const auto& block : bf.blocks) {
        if (block.size() <= 1) continue;
        std::vector<int> verts;
        for (auto [u, v] : block) {
            verts.push_back(u);
            verts.push_back(v);
        }
        auto vs = make_set(std::move(verts));
        if (block.size() != vs.size())
            throw InvariantError("block is neither an edge nor a cycle: not a cactus");
        cycles.push_back(std::move(vs));
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& verts) {
    InducedSubgraph out;
    out.to_original.assign(verts.size() + 1, 0);
    std::vector<int> to_local(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        g.require_vertex(verts[i]);
        out.to_original[i + 1] = verts[i];
        to_local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i) + 1;
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int v : g.neighbors(u))
            if (u < v && to_local[static_cast<std::size_t>(v)] != 0)
                edges.emplace_back(to_local[static_cast<std::size_t>(u)],
                                   to_local[static_cast<std::size_t>(v)]);
    out.graph = Graph(static_cast<int>(verts.size()), edges);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& restrict_to) {
    for (int v : restrict_to) g.require_vertex(v);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    std::vector<VertexSet> out;
    for (int s : restrict_to) {
        if (seen[s]) continue;
        VertexSet comp;
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.neighbors(u)) {
                if (seen[v] || !set_contains(restrict_to, v)) continue;
                seen[v] = 1;
                q.push(v);
            }
        }
        out.push_back(make_set(std::move(comp)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool separated(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (!set_intersection(a, b).empty()) return false;
    for (int u : a) {
        g.require_vertex(u);
        for (int v : g.neighbors(u))
            if (set_contains(b, v)) return false;
    }
    for (int v : b) g.require_vertex(v);
    return true;
}

VertexSet removable_vertices(const Graph& g, const VertexSet& s) {
    VertexSet out;
    for (int v : s) {
        bool removable = true;
        for (int u : g.neighbors(v))
            if (!set_contains(s, u)) {
                removable = false;
                break;
            }
        if (removable) out.push_back(v);
    }
    return out;
}

}  // namespace vcr
