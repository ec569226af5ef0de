#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rpq/graph.hpp"
#include "rpq/relation.hpp"

namespace rpq::testing {

// The running-example graph used throughout the worked examples:
// 8 vertices, 12 edges, labels a b c d.
inline LabeledGraph fig1_graph() {
    return parse_edge_list("0 a 1\n"
                           "7 d 4\n"
                           "4 b 1\n"
                           "1 c 2\n"
                           "2 c 5\n"
                           "2 b 5\n"
                           "2 b 3\n"
                           "3 b 2\n"
                           "5 b 6\n"
                           "5 c 6\n"
                           "5 c 4\n"
                           "6 c 3\n",
                           "fig1");
}

inline PairRelation rel(std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
    PairRelation r;
    for (auto [a, b] : pairs) r.insert(a, b);
    return r;
}

inline std::vector<std::pair<VertexId, VertexId>> sorted_pairs(const PairRelation& r) {
    auto v = r.pairs();
    std::sort(v.begin(), v.end());
    return v;
}

inline std::string fig1_path() { return std::string(TEST_DATA_DIR) + "/fig1.tsv"; }

} // namespace rpq::testing
