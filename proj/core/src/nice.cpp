
#include "vcr/edit_sequence.hpp"

namespace vcr {

namespace {

bool separated_from_touched(const Graph& g, int vertex, const EditSequence& window) {
    return separated(g, VertexSet{vertex}, window.touched());
}

// Subsets of positions in increasing size order, ties broken lexicographically
// on the sorted position lists.
std::vector<std::vector<int>> subsets_by_size(const std::vector<int>& positions) {
    std::size_t n = positions.size();
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(1) << n);
    for (std::uint64_t mask = 0; mask < (static_cast<std::uint64_t>(1) << n); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (static_cast<std::uint64_t>(1) << i)) sub.push_back(positions[i]);
        out.push_back(std::move(sub));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

EditSequence convert_to_nice(const Graph& g, const VertexCover& s, const VertexCover& t,
                             const EditSequence& a) {
    TraceResult input_trace = trace(g, s, a);
    if (!input_trace.valid)
        throw InvariantError("convert_to_nice requires a valid edit sequence");
    if (input_trace.final_set != t.members())
        throw InvariantError("edit sequence does not transform S into T");

    std::vector<Marker> out;
    out.reserve(static_cast<std::size_t>(a.size()));

    // Stage 1: removals separated from everything touched earlier in the
    // original sequence move to the starting piece.
    EditSequence work = a;
    {
        std::vector<Marker> mutable_work = work.markers();
        const EditSequence& original = a;
        for (int i = 1; i <= a.size(); ++i) {
            const Marker& m = a.at(i);
            if (!m.is_remove()) continue;
            if (separated_from_touched(g, m.label, original.segment(1, i - 1))) {
                out.push_back(m);
                mutable_work[static_cast<std::size_t>(i) - 1] = Marker::blank();
            }
        }
        work = clean(EditSequence(std::move(mutable_work)));
    }

    // Stage 2: peel one d-add-remove segment per iteration.
    auto contains_removal = [](const EditSequence& seq) {
        for (const Marker& m : seq.markers())
            if (m.is_remove()) return true;
        return false;
    };

    while (contains_removal(work)) {
        int first_removal = 0;
        for (int i = 1; i <= work.size(); ++i)
            if (work.at(i).is_remove()) {
                first_removal = i;
                break;
            }
        int w = work.at(first_removal).label;

        // Addition markers of N[w] occurring before the removal.
        std::vector<int> ma_positions;
        for (int q = 1; q < first_removal; ++q) {
            const Marker& m = work.at(q);
            if (m.is_add() && (m.label == w || g.has_edge(m.label, w)))
                ma_positions.push_back(q);
        }

        bool peeled = false;
        std::vector<Marker> buf = work.markers();
        for (const std::vector<int>& na : subsets_by_size(ma_positions)) {
            for (int q : na) buf[static_cast<std::size_t>(q) - 1] = Marker::blank();
            EditSequence probe{buf};

            int freed = 0;
            for (int j = 1; j <= probe.size(); ++j) {
                const Marker& m = probe.at(j);
                if (m.is_remove() &&
                    separated_from_touched(g, m.label, probe.segment(1, j - 1))) {
                    freed = j;
                    break;
                }
            }
            if (freed != 0) {
                for (int q : na) out.push_back(work.at(q));
                for (int l = 1; l <= static_cast<int>(buf.size()); ++l) {
                    const Marker m = buf[static_cast<std::size_t>(l) - 1];
                    if (!m.is_remove()) continue;
                    if (separated_from_touched(g, m.label,
                                               EditSequence{buf}.segment(1, l - 1))) {
                        out.push_back(m);
                        buf[static_cast<std::size_t>(l) - 1] = Marker::blank();
                    }
                }
                peeled = true;
                break;
            }
            for (int q : na) buf[static_cast<std::size_t>(q) - 1] = work.at(q);
        }
        if (!peeled)
            throw InvariantError("convert_to_nice failed to peel a segment from a valid input");
        work = clean(EditSequence(std::move(buf)));
    }

    // Stage 3: remaining additions form the ending piece.
    for (const Marker& m : work.markers()) out.push_back(m);

    EditSequence result{std::move(out)};
    if (result.size() != a.size())
        throw InvariantError("convert_to_nice produced a sequence of different length");
    return result;
}

}  // namespace vcr
