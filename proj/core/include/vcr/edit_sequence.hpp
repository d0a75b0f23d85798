#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vcr/graph.hpp"

namespace vcr {

enum class MarkerKind { blank, add, remove };

// One entry of an edit sequence. label == 0 means unlabeled; blanks are never
// labeled.
struct Marker {
    MarkerKind kind = MarkerKind::blank;
    int label = 0;

    bool is_blank() const { return kind == MarkerKind::blank; }
    bool is_add() const { return kind == MarkerKind::add; }
    bool is_remove() const { return kind == MarkerKind::remove; }
    bool is_labeled() const { return label != 0; }

    bool operator==(const Marker&) const = default;

    static Marker blank() { return {MarkerKind::blank, 0}; }
    static Marker add(int v = 0) { return {MarkerKind::add, v}; }
    static Marker remove(int v = 0) { return {MarkerKind::remove, v}; }
};

// Ordered marker list. Positions are 1-based throughout, matching the segment
// notation a[p1, p2].
class EditSequence {
  public:
    EditSequence() = default;
    explicit EditSequence(std::vector<Marker> markers);

    int size() const { return static_cast<int>(markers_.size()); }
    bool empty() const { return markers_.empty(); }
    const Marker& at(int pos) const;  // 1-based
    const std::vector<Marker>& markers() const { return markers_; }

    // Markers at positions p1..p2 inclusive.
    EditSequence segment(int p1, int p2) const;

    bool is_partial() const;  // contains at least one blank
    bool is_full() const { return !is_partial(); }
    bool is_unlabeled() const;      // no labeled markers
    bool is_labeled() const;        // no unlabeled add/remove markers
    bool is_partly_labeled() const; // at least one of each
    int blank_count() const;

    // Labels of the touched vertices, as a set.
    VertexSet touched() const;
    // Touch count per label.
    std::vector<std::pair<int, int>> touch_counts() const;

    bool operator==(const EditSequence&) const = default;

  private:
    std::vector<Marker> markers_;
};

EditSequence concat(const EditSequence& b, const EditSequence& c);
// Drops positions p1..p2 (1-based, inclusive).
EditSequence cut(const EditSequence& b, int p1, int p2);
// Removes every blank marker.
EditSequence clean(const EditSequence& b);
// Replaces the p-th blank of b with the p-th marker of c; the blank count of b
// must equal |c| and c must be full.
EditSequence merge(const EditSequence& b, const EditSequence& c);
// Attaches labels positionally to a full unlabeled sequence.
EditSequence label_sequence(const EditSequence& unlabeled, const std::vector<int>& labels);

// Visits every interleaving of the given full labeled sequences, preserving
// each input's internal order. The visitor returns false to stop the whole
// enumeration. Returns the number of interleavings visited.
std::uint64_t mix_enumerate(const std::vector<EditSequence>& seqs,
                            const std::function<bool(const EditSequence&)>& visitor);

// Text format: '+' add, '-' remove, '_' blank, '+17' add vertex 17, '-4'
// remove vertex 4; tokens are whitespace-separated.
EditSequence parse_edit_sequence(const std::string& text);
std::string format_edit_sequence(const EditSequence& seq);

struct TraceResult {
    bool valid = false;
    std::optional<int> failure_position;
    std::vector<int> prefix_sizes;  // |V(S, a[1..p])| for each executed position
    int cap = 0;                    // max prefix size; |S| for the empty sequence
    VertexSet final_set;
};

// Simulates a full labeled sequence from cover s under strict semantics:
// adding a present vertex or removing an absent one invalidates the sequence,
// as does any prefix that is not a vertex cover.
TraceResult trace(const Graph& g, const VertexCover& s, const EditSequence& a);

// trace + cap <= k.
bool is_tight(const Graph& g, const VertexCover& s, const EditSequence& a, int k);

struct AddRemoveSegment {
    int add_start = 0;  // 1-based positions into the sequence
    int add_len = 0;
    int remove_start = 0;
    int remove_len = 0;

    int begin() const { return add_start; }
    int end() const { return remove_start + remove_len - 1; }
};

struct WellFormedDecomposition {
    bool well_formed = false;
    int starting_len = 0;  // leading removal run
    std::vector<AddRemoveSegment> segments;
    int ending_start = 0;  // first position of the trailing addition run, 0 if empty
    int ending_len = 0;
};

// Canonical decomposition: greedy-longest starting removal run, then maximal
// add-run/remove-run pairs as central segments, then a trailing add run as the
// ending piece. d-well-formed iff every central run has length in 1..d.
WellFormedDecomposition decompose_d_well_formed(const EditSequence& a, int d);
bool is_d_well_formed(const EditSequence& a, int d);

// True iff the labeled removal at position p could not validly occur before
// some earlier addition marker (checked by re-simulating the reordered
// prefix).
bool satisfies_non_separation(const Graph& g, const VertexCover& s, const EditSequence& a, int p);

struct NiceCheck {
    bool nice = false;
    std::string reason;  // empty when nice
};

// Nice = valid + d-well-formed + connected touched set per central segment +
// early-removal invariant over all (add, add, remove) position triples.
NiceCheck check_nice(const Graph& g, const VertexCover& s, const EditSequence& a, int d);
bool is_nice(const Graph& g, const VertexCover& s, const EditSequence& a, int d);

// Rewrites a valid sequence from s to t into a nice one with pointwise
// prefix-size dominance.
EditSequence convert_to_nice(const Graph& g, const VertexCover& s, const VertexCover& t,
                             const EditSequence& a);

enum class EnumVerdict { descend, skip_children, stop };

// Visits every full (alphabet {a,r}) or partial (alphabet {_,a,r}) unlabeled
// sequence of size 1..max_len, shortest prefixes first within a DFS; the
// verdict controls extension. Returns the number of sequences visited.
std::uint64_t enumerate_unlabeled(int max_len, bool partial,
                                  const std::function<EnumVerdict(const EditSequence&)>& visitor,
                                  Budget* budget = nullptr);

// Same over labeled markers drawn from the vertex pool.
std::uint64_t enumerate_labeled_over(const VertexSet& pool, int max_len, bool partial,
                                     const std::function<EnumVerdict(const EditSequence&)>& visitor,
                                     Budget* budget = nullptr);

}  // namespace vcr
