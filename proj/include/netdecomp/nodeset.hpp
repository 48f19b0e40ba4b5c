#pragma once

#include <algorithm>
#include <vector>

namespace netdecomp {

// Node sets are sorted vectors of 0-based node indices.
using NodeSet = std::vector<int>;

inline bool set_contains(const NodeSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline NodeSet set_intersect(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline NodeSet set_complement(const NodeSet& s, int n) {
    NodeSet out;
    for (int i = 0; i < n; ++i)
        if (!set_contains(s, i)) out.push_back(i);
    return out;
}

}  // namespace netdecomp
