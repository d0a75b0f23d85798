#include "vcr/edit_sequence.hpp"

#include <sstream>

namespace vcr {

EditSequence::EditSequence(std::vector<Marker> markers) : markers_(std::move(markers)) {
    for (const Marker& m : markers_) {
        if (m.is_blank() && m.label != 0)
            throw InvariantError("blank markers cannot carry labels");
        if (m.label < 0) throw InvariantError("negative vertex label");
    }
}

const Marker& EditSequence::at(int pos) const {
    if (pos < 1 || pos > size())
        throw InvariantError("position " + std::to_string(pos) + " out of range 1.." +
                             std::to_string(size()));
    return markers_[static_cast<std::size_t>(pos) - 1];
}

EditSequence EditSequence::segment(int p1, int p2) const {
    if (p1 > p2) return {};
    if (p1 < 1 || p2 > size())
        throw InvariantError("segment [" + std::to_string(p1) + "," + std::to_string(p2) +
                             "] out of range");
    return EditSequence(std::vector<Marker>(markers_.begin() + p1 - 1, markers_.begin() + p2));
}

bool EditSequence::is_partial() const {
    for (const Marker& m : markers_)
        if (m.is_blank()) return true;
    return false;
}

bool EditSequence::is_unlabeled() const {
    for (const Marker& m : markers_)
        if (m.is_labeled()) return false;
    return true;
}

bool EditSequence::is_labeled() const {
    for (const Marker& m : markers_)
        if (!m.is_blank() && !m.is_labeled()) return false;
    return true;
}

bool EditSequence::is_partly_labeled() const {
    bool any_unlabeled = false, any_labeled = false;
    for (const Marker& m : markers_) {
        if (m.is_blank()) continue;
        (m.is_labeled() ? any_labeled : any_unlabeled) = true;
    }
    return any_unlabeled && any_labeled;
}

int EditSequence::blank_count() const {
    int c = 0;
    for (const Marker& m : markers_)
        if (m.is_blank()) ++c;
    return c;
}

VertexSet EditSequence::touched() const {
    std::vector<int> v;
    for (const Marker& m : markers_)
        if (m.is_labeled()) v.push_back(m.label);
    return make_set(std::move(v));
}

std::vector<std::pair<int, int>> EditSequence::touch_counts() const {
    std::vector<std::pair<int, int>> counts;
    for (int v : touched()) counts.emplace_back(v, 0);
    for (const Marker& m : markers_) {
        if (!m.is_labeled()) continue;
        auto it = std::lower_bound(counts.begin(), counts.end(), std::make_pair(m.label, 0));
        ++it->second;
    }
    return counts;
}

EditSequence concat(const EditSequence& b, const EditSequence& c) {
    std::vector<Marker> out = b.markers();
    out.insert(out.end(), c.markers().begin(), c.markers().end());
    return EditSequence(std::move(out));
}

EditSequence cut(const EditSequence& b, int p1, int p2) {
    if (p1 < 1 || p2 > b.size() || p1 > p2)
        throw InvariantError("cut positions [" + std::to_string(p1) + "," + std::to_string(p2) +
                             "] out of range");
    return concat(b.segment(1, p1 - 1), b.segment(p2 + 1, b.size()));
}

EditSequence clean(const EditSequence& b) {
    std::vector<Marker> out;
    out.reserve(static_cast<std::size_t>(b.size()));
    for (const Marker& m : b.markers())
        if (!m.is_blank()) out.push_back(m);
    return EditSequence(std::move(out));
}

EditSequence merge(const EditSequence& b, const EditSequence& c) {
    if (!c.is_full()) throw InvariantError("filling sequence must be full");
    if (b.blank_count() != c.size())
        throw InvariantError("blank count " + std::to_string(b.blank_count()) +
                             " does not match filling size " + std::to_string(c.size()));
    std::vector<Marker> out = b.markers();
    int next = 0;
    for (Marker& m : out)
        if (m.is_blank()) m = c.markers()[static_cast<std::size_t>(next++)];
    return EditSequence(std::move(out));
}

EditSequence label_sequence(const EditSequence& unlabeled, const std::vector<int>& labels) {
    if (!unlabeled.is_full() || !unlabeled.is_unlabeled())
        throw InvariantError("label() expects a full unlabeled sequence");
    if (static_cast<int>(labels.size()) != unlabeled.size())
        throw InvariantError("label list size " + std::to_string(labels.size()) +
                             " does not match sequence size " + std::to_string(unlabeled.size()));
    std::vector<Marker> out = unlabeled.markers();
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (labels[i] < 1) throw InvariantError("labels must be positive vertex ids");
        out[i].label = labels[i];
    }
    return EditSequence(std::move(out));
}

namespace {

std::uint64_t mix_rec(const std::vector<EditSequence>& seqs, std::vector<int>& idx,
                      std::vector<Marker>& acc, int remaining,
                      const std::function<bool(const EditSequence&)>& visitor, bool& stopped) {
    if (remaining == 0) {
        if (!visitor(EditSequence(acc))) stopped = true;
        return 1;
    }
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < seqs.size() && !stopped; ++i) {
        if (idx[i] >= seqs[i].size()) continue;
        acc.push_back(seqs[i].markers()[static_cast<std::size_t>(idx[i])]);
        ++idx[i];
        count += mix_rec(seqs, idx, acc, remaining - 1, visitor, stopped);
        --idx[i];
        acc.pop_back();
    }
    return count;
}

}  // namespace

std::uint64_t mix_enumerate(const std::vector<EditSequence>& seqs,
                            const std::function<bool(const EditSequence&)>& visitor) {
    int total = 0;
    for (const EditSequence& s : seqs) {
        if (!s.is_full() || !s.is_labeled())
            throw InvariantError("mix() expects full labeled sequences");
        total += s.size();
    }
    std::vector<int> idx(seqs.size(), 0);
    std::vector<Marker> acc;
    acc.reserve(static_cast<std::size_t>(total));
    bool stopped = false;
    return mix_rec(seqs, idx, acc, total, visitor, stopped);
}

EditSequence parse_edit_sequence(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<Marker> out;
    while (in >> tok) {
        if (tok == "_") {
            out.push_back(Marker::blank());
            continue;
        }
        if (tok.empty() || (tok[0] != '+' && tok[0] != '-'))
            throw ParseError("bad edit-sequence token '" + tok + "'");
        MarkerKind kind = tok[0] == '+' ? MarkerKind::add : MarkerKind::remove;
        int lab = 0;
        if (tok.size() > 1) {
            try {
                std::size_t pos = 0;
                lab = std::stoi(tok.substr(1), &pos);
                if (pos != tok.size() - 1 || lab < 1) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("bad edit-sequence token '" + tok + "'");
            }
        }
        out.push_back({kind, lab});
    }
    return EditSequence(std::move(out));
}

std::string format_edit_sequence(const EditSequence& seq) {
    std::string out;
    for (int p = 1; p <= seq.size(); ++p) {
        if (p > 1) out += ' ';
        const Marker& m = seq.at(p);
        if (m.is_blank())
            out += '_';
        else {
            out += m.is_add() ? '+' : '-';
            if (m.is_labeled()) out += std::to_string(m.label);
        }
    }
    return out;
}

TraceResult trace(const Graph& g, const VertexCover& s, const EditSequence& a) {
    if (!a.is_full() || !a.is_labeled())
        throw InvariantError("trace() expects a full labeled sequence");
    TraceResult r;
    VertexSet cur = s.members();
    r.prefix_sizes.reserve(static_cast<std::size_t>(a.size()));
    for (int p = 1; p <= a.size(); ++p) {
        const Marker& m = a.at(p);
        g.require_vertex(m.label);
        bool present = set_contains(cur, m.label);
        if (m.is_add()) {
            if (present) {
                r.failure_position = p;
                r.final_set = cur;
                return r;
            }
            set_insert(cur, m.label);
        } else {
            if (!present) {
                r.failure_position = p;
                r.final_set = cur;
                return r;
            }
            // Removal keeps the cover property iff every neighbor is present.
            for (int u : g.neighbors(m.label))
                if (!set_contains(cur, u)) {
                    r.failure_position = p;
                    r.final_set = cur;
                    return r;
                }
            set_erase(cur, m.label);
        }
        r.prefix_sizes.push_back(static_cast<int>(cur.size()));
    }
    // cap ranges over the executed prefixes; the empty sequence keeps |S|.
    r.cap = a.empty() ? s.size()
                      : *std::max_element(r.prefix_sizes.begin(), r.prefix_sizes.end());
    r.valid = true;
    r.final_set = std::move(cur);
    return r;
}

bool is_tight(const Graph& g, const VertexCover& s, const EditSequence& a, int k) {
    TraceResult r = trace(g, s, a);
    return r.valid && r.cap <= k && s.size() <= k;
}

WellFormedDecomposition decompose_d_well_formed(const EditSequence& a, int d) {
    if (d < 1) throw InvariantError("degree bound d must be positive");
    if (!a.is_full()) throw InvariantError("d-well-formedness is defined for full sequences");
    WellFormedDecomposition out;
    int n = a.size();
    int p = 1;
    while (p <= n && a.at(p).is_remove()) ++p;
    out.starting_len = p - 1;

    while (p <= n) {
        int add_start = p;
        while (p <= n && a.at(p).is_add()) ++p;
        int add_len = p - add_start;
        if (p > n) {
            out.ending_start = add_start;
            out.ending_len = add_len;
            break;
        }
        int rem_start = p;
        while (p <= n && a.at(p).is_remove()) ++p;
        int rem_len = p - rem_start;
        if (add_len < 1 || add_len > d || rem_len < 1 || rem_len > d) return out;
        out.segments.push_back({add_start, add_len, rem_start, rem_len});
    }
    out.well_formed = true;
    return out;
}

bool is_d_well_formed(const EditSequence& a, int d) {
    return decompose_d_well_formed(a, d).well_formed;
}

bool satisfies_non_separation(const Graph& g, const VertexCover& s, const EditSequence& a, int p) {
    if (p < 1 || p > a.size()) throw InvariantError("position out of range");
    const Marker& rm = a.at(p);
    if (!rm.is_remove() || !rm.is_labeled())
        throw InvariantError("non-separation is defined for labeled removal markers");
    for (int q = 1; q < p; ++q) {
        if (!(a.at(q).is_add() && a.at(q).is_labeled())) continue;
        // Could the removal occur just before position q?
        EditSequence reordered =
            concat(a.segment(1, q - 1), EditSequence({rm}));
        if (!trace(g, s, reordered).valid) return true;
    }
    return false;
}

NiceCheck check_nice(const Graph& g, const VertexCover& s, const EditSequence& a, int d) {
    NiceCheck out;
    TraceResult t = trace(g, s, a);
    if (!t.valid) {
        out.reason = "invalid at position " + std::to_string(*t.failure_position);
        return out;
    }
    WellFormedDecomposition dec = decompose_d_well_formed(a, d);
    if (!dec.well_formed) {
        out.reason = "not " + std::to_string(d) + "-well-formed";
        return out;
    }
    for (std::size_t i = 0; i < dec.segments.size(); ++i) {
        const AddRemoveSegment& seg = dec.segments[i];
        VertexSet vs = a.segment(seg.begin(), seg.end()).touched();
        if (connected_components(g, vs).size() > 1) {
            out.reason = "segment " + std::to_string(i + 1) + " touches a disconnected set";
            return out;
        }
    }
    // Early removal invariant, literally over all (p1, p2, p3) triples with
    // additions at p1 < p2 and a removal at p3.
    for (int p3 = 1; p3 <= a.size(); ++p3) {
        if (!a.at(p3).is_remove()) continue;
        VertexSet rv{a.at(p3).label};
        for (int p1 = 1; p1 + 1 < p3; ++p1) {
            if (!a.at(p1).is_add()) continue;
            bool has_middle_add = false;
            for (int p2 = p1 + 1; p2 < p3; ++p2)
                if (a.at(p2).is_add()) {
                    has_middle_add = true;
                    break;
                }
            if (!has_middle_add) continue;
            VertexSet window = a.segment(p1 + 1, p3 - 1).touched();
            if (separated(g, rv, window)) {
                out.reason = "early-removal violated at triple (" + std::to_string(p1) + ",.," +
                             std::to_string(p3) + ")";
                return out;
            }
        }
    }
    out.nice = true;
    return out;
}

bool is_nice(const Graph& g, const VertexCover& s, const EditSequence& a, int d) {
    return check_nice(g, s, a, d).nice;
}

namespace {

std::uint64_t enumerate_rec(std::vector<Marker>& acc, int max_len,
                            const std::vector<Marker>& alphabet,
                            const std::function<EnumVerdict(const EditSequence&)>& visitor,
                            Budget* budget, bool& stopped) {
    if (static_cast<int>(acc.size()) == max_len || stopped) return 0;
    std::uint64_t count = 0;
    for (const Marker& m : alphabet) {
        if (stopped) break;
        if (budget) budget->charge();
        acc.push_back(m);
        ++count;
        EnumVerdict v = visitor(EditSequence(acc));
        if (v == EnumVerdict::stop)
            stopped = true;
        else if (v == EnumVerdict::descend)
            count += enumerate_rec(acc, max_len, alphabet, visitor, budget, stopped);
        acc.pop_back();
    }
    return count;
}

}  // namespace

std::uint64_t enumerate_unlabeled(int max_len, bool partial,
                                  const std::function<EnumVerdict(const EditSequence&)>& visitor,
                                  Budget* budget) {
    if (max_len < 1) throw InvariantError("max_len must be at least 1");
    std::vector<Marker> alphabet;
    if (partial) alphabet.push_back(Marker::blank());
    alphabet.push_back(Marker::add());
    alphabet.push_back(Marker::remove());
    std::vector<Marker> acc;
    bool stopped = false;
    return enumerate_rec(acc, max_len, alphabet, visitor, budget, stopped);
}

std::uint64_t enumerate_labeled_over(const VertexSet& pool, int max_len, bool partial,
                                     const std::function<EnumVerdict(const EditSequence&)>& visitor,
                                     Budget* budget) {
    if (pool.empty()) throw InvariantError("vertex pool must be nonempty");
    if (max_len < 1) throw InvariantError("max_len must be at least 1");
    std::vector<Marker> alphabet;
    if (partial) alphabet.push_back(Marker::blank());
    for (int v : pool) alphabet.push_back(Marker::add(v));
    for (int v : pool) alphabet.push_back(Marker::remove(v));
    std::vector<Marker> acc;
    bool stopped = false;
    return enumerate_rec(acc, max_len, alphabet, visitor, budget, stopped);
}

}  // namespace vcr
