#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcr/common.hpp"

namespace vcr {

// Simple undirected graph over vertices 1..n, immutable after construction.
class Graph {
  public:
    Graph() = default;
    // Edges must satisfy 1 <= u,v <= n, u != v; duplicates and self-loops are
    // rejected.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const VertexSet& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool valid_vertex(int v) const { return v >= 1 && v <= n_; }
    void require_vertex(int v) const;

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;  // index 0 unused
    std::vector<std::pair<int, int>> edges_;
};

// Graph file format: first line "n m", then m lines "u v" with
// 1 <= u < v <= n; '#'-prefixed comment lines are ignored.
Graph load_graph(std::istream& in);
Graph load_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& s);

// Vertex set whose cover invariant against a specific graph was checked at
// construction.
class VertexCover {
  public:
    VertexCover() = default;
    VertexCover(const Graph& g, VertexSet members);

    const VertexSet& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int v) const { return set_contains(members_, v); }

  private:
    VertexSet members_;
};

struct DiffPartition {
    VertexSet c_st;  // S ∩ T
    VertexSet s_r;   // S \ T
    VertexSet t_a;   // T \ S
    VertexSet o_st;  // rest
};

DiffPartition diff_partition(const Graph& g, const VertexCover& s, const VertexCover& t);

VertexSet ball(const Graph& g, int center, int radius);
VertexSet ball_of_set(const Graph& g, const VertexSet& a, int radius);

struct Matching {
    std::vector<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(edges.size()); }
    VertexSet vertices() const;
};

// Greedy maximal matching, scanning edges in lexicographic (u,v) order.
Matching maximal_matching(const Graph& g);

// Maximum matching of the bipartite induced subgraph G[left ∪ right] via
// augmenting paths. Both sides must be independent sets.
Matching max_bipartite_matching(const Graph& g, const VertexSet& left, const VertexSet& right);

struct GraphClass {
    bool connected = false;
    bool tree = false;
    bool forest = false;
    bool cactus = false;  // every block is an edge or an induced cycle
    bool bipartite = false;
    bool four_regular = false;
    int max_degree = 0;
};

GraphClass classify(const Graph& g);

// Vertex sets of the cycle blocks found by the biconnected-component
// decomposition. On a cactus these are exactly the cycles of the graph.
std::vector<VertexSet> cycle_blocks(const Graph& g);

struct InducedSubgraph {
    Graph graph;                  // vertices relabeled 1..|verts|
    std::vector<int> to_original; // index 1..|verts| -> original id
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& verts);

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& restrict_to);

// True iff a and b are disjoint and no edge joins them. Overlapping sets are
// not separated by convention.
bool separated(const Graph& g, const VertexSet& a, const VertexSet& b);

// Vertices v of s with N(v) ⊆ s; s is a minimal cover iff this is empty.
VertexSet removable_vertices(const Graph& g, const VertexSet& s);

}  // namespace vcr
