#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcr {

// Vertex ids are 1-based dense integers. A VertexSet is always sorted and
// duplicate-free; the helpers below keep that invariant.
using VertexSet = std::vector<int>;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class InvariantError : public Error {
  public:
    using Error::Error;
};

class TooLargeError : public Error {
  public:
    using Error::Error;
};

class BudgetError : public Error {
  public:
    using Error::Error;
};

// Work counter shared by the combinatorial enumeration loops. Exceeding the
// limit raises BudgetError instead of hanging.
struct Budget {
    std::uint64_t limit = 0;  // 0 = unlimited
    std::uint64_t used = 0;

    void charge(std::uint64_t units = 1) {
        used += units;
        if (limit != 0 && used > limit)
            throw BudgetError("work budget exceeded (" + std::to_string(used) + " > " +
                              std::to_string(limit) + " units)");
    }
};

inline VertexSet make_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline void set_insert(VertexSet& s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
}

inline void set_erase(VertexSet& s, int v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v) s.erase(it);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_symmetric_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

std::string format_vertex_set(const VertexSet& s);

// Parses a whitespace-separated list of vertex ids; an empty or blank string
// yields the empty set.
VertexSet parse_vertex_set(const std::string& text);

}  // namespace vcr
