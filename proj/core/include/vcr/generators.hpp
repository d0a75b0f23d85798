#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "vcr/graph.hpp"
#include "vcr/rng.hpp"

namespace vcr {

enum class GraphFamily { tree, cactus, bounded_degree, bipartite };

struct GenSpec {
    GraphFamily family = GraphFamily::tree;
    int n = 1;
    std::optional<int> degree_bound;  // bounded_degree only
    std::optional<int> cycle_count;   // cactus only
    std::uint64_t seed = 0;
};

// Seeded-deterministic instance factory; the produced graph is re-checked
// against the requested family via classify().
Graph gen_graph(const GenSpec& spec);

// Two valid covers: a randomized greedy cover and a locally perturbed variant.
std::pair<VertexCover, VertexCover> gen_cover_pair(const Graph& g, std::uint64_t seed);

GraphFamily parse_family(const std::string& name);

}  // namespace vcr
