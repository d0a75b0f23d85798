#pragma once

#include <optional>

#include "vcr/oracle.hpp"

namespace vcr {

struct Crown {
    VertexSet w_set;
    VertexSet h_set;
};

struct ConstrainedCrown {
    Crown crown;
    int k = 0;
    int d = 0;
};

struct CrownCheck {
    bool ok = false;
    std::string reason;
    std::optional<Crown> repaired;  // sub-crown found by the Hall repair loop
};

// Checks every (k,d)-constrained crown property including H-saturation; on a
// saturation failure the Hall repair loop reports a repaired sub-crown when
// one survives.
CrownCheck verify_crown(const Graph& g, const VertexSet& side_a, const VertexSet& side_b,
                        const Crown& crown, int k, int d);

// Exhaustive search over heads H ⊆ B with |H| <= k, maximal W per head.
// Desk-scale only.
std::optional<ConstrainedCrown> find_constrained_crown_bruteforce(const Graph& g,
                                                                  const VertexSet& side_a,
                                                                  const VertexSet& side_b, int k,
                                                                  int d);

struct BccInstance {
    Graph graph;
    VertexSet side_a;  // X ∪ Z
    VertexSet side_b;  // Y
    int k = 0;
    int d = 0;
    int n_orig = 0;  // x_i = i, y_i = n + i, z_e = 2n + e (edge index order)
};

// k-Clique -> (k, C(k,2))-BCC: one x/y pair per vertex, one degree-two
// A-vertex per edge. The output is C4-free with A-side degrees at most two.
BccInstance reduce_clique_to_bcc(const Graph& g, int k);

struct BccVcrReduction {
    ReconfigInstance instance;
    int a_size = 0, b_size = 0, t = 0, d = 0;
    VertexSet orig_side_a, orig_side_b;
    // layout: x_i = i, y_j = |A| + j, u_i = |A| + |B| + i,
    //         v_i = |A| + |B| + (d + t) + i, indexed by side position
};

// BCC -> bipartite VCR with the K_{d+t,d+t} capacity lock: S = X ∪ U,
// T = X ∪ V, k = |A| + d + 2t, l = 4d + 6t.
BccVcrReduction reduce_bcc_to_vcr(const Graph& g, const VertexSet& side_a,
                                  const VertexSet& side_b, int t, int d);

// Six-phase YES-witness from a constrained crown (given in input-graph ids).
EditSequence bcc_vcr_witness(const BccVcrReduction& red, const Crown& crown);

struct CompressionVcrReduction {
    ReconfigInstance instance;
    int n = 0, k = 0;  // layout: g_i = i, a_i = n + i, b_i = n + k + i
};

// Vertex Cover Compression -> VCR: disjoint union with K_{k,k}, budget
// (3k-1, 6k-2).
CompressionVcrReduction reduce_compression_to_vcr(const Graph& g, const VertexCover& c, int k);

// Witness from a (k-1)-cover of the original graph.
EditSequence compression_vcr_witness(const CompressionVcrReduction& red,
                                     const VertexSet& c_prime);

class NecklaceGadget {
  public:
    explicit NecklaceGadget(int k);

    int k() const { return k_; }
    const Graph& graph() const { return graph_; }
    const VertexCover& s_cover() const { return s_; }
    const VertexCover& t_cover() const { return t_; }

    // 1 <= i, j <= k; pairs are (lower id, higher id).
    int upper_bead(int i, int j) const { return necklace_base(false, i) + j; }
    int lower_bead(int i, int j) const { return necklace_base(true, i) + j; }
    std::pair<int, int> upper_sequin_pair(int i, int j) const { return sequin(false, i, j); }
    std::pair<int, int> lower_sequin_pair(int i, int j) const { return sequin(true, i, j); }

  private:
    int necklace_base(bool lower, int i) const { return ((lower ? k_ : 0) + i - 1) * 3 * k_; }
    std::pair<int, int> sequin(bool lower, int i, int j) const {
        int base = necklace_base(lower, i) + k_ + 2 * (j - 1);
        return {base + 1, base + 2};
    }

    int k_ = 0;
    Graph graph_;
    VertexCover s_, t_;
};

// The 4-regular W_k gadget: 2k necklaces joined by k^2 vertex-disjoint
// K_{2,2} bicliques; 6k^2 vertices total.
NecklaceGadget build_wk(int k);

// Explicit reconfiguration of the gadget's S into T: length 6k^2, every
// vertex touched exactly once, capacity at most 3k^2 + k + 3.
EditSequence wk_witness_sequence(const NecklaceGadget& gadget);

struct FourRegularReduction {
    ReconfigInstance instance;
    NecklaceGadget gadget;  // ids shifted by n inside `instance`
    int n = 0, k = 0, f_k = 0;
};

// Compression -> VCR on 4-regular graphs: disjoint union with W_k, budget
// (3k^2 + k + f_k - 1, 6k^2 + 4k - 2). f_k defaults to the proven k + 3
// upper bound; its exact value is open.
FourRegularReduction reduce_compression_to_vcr_4regular(const Graph& g, const VertexCover& c,
                                                        int k, std::optional<int> f_k = {});

EditSequence four_regular_witness(const FourRegularReduction& red, const VertexSet& c_prime);

// Desk-scale decision helpers used by the equivalence suites.
bool has_clique_bruteforce(const Graph& g, int size);
std::optional<VertexSet> find_cover_of_size_bruteforce(const Graph& g, int size);

}  // namespace vcr
