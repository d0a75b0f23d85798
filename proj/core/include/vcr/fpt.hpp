#pragma once

#include <optional>

#include "vcr/oracle.hpp"

namespace vcr {

struct LayerDecomposition {
    // c_by_dist[i] = vertices of C_ST at distance exactly i from S_R ∪ T_A
    // (index 0 unused); o_by_dist likewise for O_ST with i >= 2.
    std::vector<VertexSet> c_by_dist;
    std::vector<VertexSet> o_by_dist;
    VertexSet c_inf, o_inf;  // unreachable remainder

    VertexSet c_at(int i) const;
    VertexSet o_at(int i) const;
};

LayerDecomposition decompose_layers(const Graph& g, const VertexCover& s, const VertexCover& t);

// Annotated instance: X and R are separated, S_R ∪ T_A ⊆ X, the wall W ⊆ C_ST
// stays untouched during reconfiguration.
struct AvcrInstance {
    const Graph* g = nullptr;
    VertexCover s, t;
    int k = 0;
    int l = 0;
    int d = 0;  // degree bound in force
    int layer = 0;
    VertexSet x_set, w_set, r_set;
};

// The 2l annotated instances whose disjunction answers the original instance.
std::vector<AvcrInstance> make_avcr_instances(const ReconfigInstance& inst, int d);

// Binomial upper bound C(p+q-2, q-1) on the Ramsey number R(p, q).
std::uint64_t ramsey_bound(int p, int q);

// Independent set of the requested size inside `within`, or nullopt. Greedy
// fast path (sufficient above the Ramsey threshold), exact branching
// otherwise.
std::optional<VertexSet> find_independent_set(const Graph& g, const VertexSet& within, int size,
                                              Budget* budget = nullptr);

struct AuxVertex {
    int center = 0;
    int color = 0;  // 1-based piece index
    EditSequence seq;
};

struct AuxGraph {
    std::vector<AuxVertex> vertices;
    std::vector<std::pair<int, int>> edges;  // 1-based indices into vertices

    int cross_color_degree_bound() const;
};

// One aux vertex per distinct nice labeling of a piece with a connected
// touched set; edges join differently colored labelings whose touched sets
// are not separated.
AuxGraph const_aux_graph(const Graph& g, const VertexCover& s,
                         const std::vector<EditSequence>& pieces, int d, Budget& budget);

struct ColoredGraph {
    Graph graph;
    std::vector<int> color;  // index 1..n, colors 1..l

    int color_count() const;
};

ColoredGraph to_colored_graph(const AuxGraph& aux);

// Multicolored independent set of size y, given a bound d_prime on the number
// of neighbors any vertex has inside each other color class.
std::optional<VertexSet> multicolored_is(const ColoredGraph& cg, int y, int d_prime,
                                         Budget& budget);

// Labels gamma into a sequence that is nice starting from s, or nullopt.
std::optional<EditSequence> solve_vcw(const Graph& g, const VertexCover& s,
                                      const EditSequence& gamma, int d, Budget& budget);

SolveOutcome solve_avcr(const AvcrInstance& a, Budget& budget);

// FPT pipeline for graphs of degree at most d: 2l annotated instances, each
// solved by enumeration plus the walk machinery. The degree bound is taken
// from the graph; d_override may only raise it.
SolveOutcome solve_fpt(const ReconfigInstance& inst, Budget& budget,
                       std::optional<int> d_override = std::nullopt);

}  // namespace vcr
