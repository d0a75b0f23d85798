#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "vcr/edit_sequence.hpp"
#include "vcr/graph.hpp"

namespace vcr {

struct ReconfigInstance {
    Graph g;
    VertexCover s;
    VertexCover t;
    int k = 0;
    std::optional<int> l;

    ReconfigInstance(Graph graph, VertexCover source, VertexCover target, int capacity,
                     std::optional<int> length_bound = std::nullopt);
};

struct SolveOutcome {
    bool yes = false;
    std::optional<EditSequence> witness;
    std::optional<int> length;
    std::optional<int> cap;
    std::string reason;
};

struct ReconfigGraphStats {
    std::int64_t node_count = 0;
    std::int64_t edge_count = 0;
    int diameter = 0;  // max over connected components
};

namespace oracle {

// Desk-scale guard: the oracle refuses graphs with more than this many
// vertices or an estimated node count beyond kNodeLimit.
inline constexpr int kVertexLimit = 24;
inline constexpr std::int64_t kNodeLimit = 20'000'000;

// Visits every vertex cover of g with size <= k exactly once. Branches on the
// endpoints of uncovered edges in id order, inclusion first, so the visiting
// order is deterministic. Vertices in `frozen` are pinned inside every
// visited cover.
std::uint64_t enumerate_covers(const Graph& g, int k,
                               const std::function<void(const VertexSet&)>& visitor,
                               const VertexSet& frozen = {});

// BFS over R_VC(G, 0, k). NO if t is unreachable from s, else YES with a
// minimum-length witness (re-verified by trace). Vertices in `frozen` may
// never be touched; they must belong to both covers.
SolveOutcome bfs_shortest(const ReconfigInstance& inst, const VertexSet& frozen = {});

ReconfigGraphStats stats(const Graph& g, int k);

// A valid tight sequence of at most `steps` uniformly random legal moves,
// deterministic under the seed. May be shorter when no legal move exists.
EditSequence random_walk_harvest(const Graph& g, const VertexCover& s, int k, int steps,
                                 std::uint64_t seed);

}  // namespace oracle

}  // namespace vcr
