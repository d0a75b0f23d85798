#pragma once

#include <functional>

#include "vcr/oracle.hpp"

namespace vcr {

enum class PrefixSide { source, target };

// A c-bounded prefix: touches only symmetric-difference vertices, never twice,
// never exceeds the starting size by more than c, and does not grow the cover.
struct BoundedPrefix {
    EditSequence moves;  // applied to the cover of `from_side`
    int c = 0;
    PrefixSide from_side = PrefixSide::source;
};

// Checks the four defining conditions of a c-bounded prefix of a
// reconfiguration from `from` toward `toward`.
bool verify_bounded_prefix(const Graph& g, const VertexCover& from, const VertexCover& toward,
                           const BoundedPrefix& p);

using PrefixFinder =
    std::function<BoundedPrefix(const Graph&, const VertexCover&, const VertexCover&)>;

// Degree-0 vertex in the difference graph: single removal (c = 0); degree-1:
// add the unique neighbor, then remove (c = 1). Requires G[S Δ T] to be a
// forest and S != T. Candidates are scanned in ascending vertex id.
BoundedPrefix find_tree_prefix(const Graph& g, const VertexCover& s, const VertexCover& t);

// Tree-style prefix when the difference graph has a degree-<=1 vertex;
// otherwise the clockwise cycle schedule over a cycle whose emptied side has
// degree exactly two everywhere (c = 2).
BoundedPrefix find_cactus_prefix(const Graph& g, const VertexCover& s, const VertexCover& t);

// Repeatedly applies prefixes from either side; the witness has length exactly
// |S Δ T|. Requires |s| <= k-c and |t| <= k-c so every prefix stays within
// capacity. Target-side prefixes become reversed-and-inverted tail moves.
SolveOutcome drive_prefixes(const Graph& g, const VertexCover& s, const VertexCover& t, int k,
                            int c, const PrefixFinder& finder);

// Exact shortest-length solver for forests.
SolveOutcome solve_tree(const ReconfigInstance& inst);

// Exact shortest-length solver for cactus graphs (forests included).
SolveOutcome solve_cactus(const ReconfigInstance& inst);

}  // namespace vcr
