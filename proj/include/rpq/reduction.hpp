#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rpq/relation.hpp"

namespace rpq {

using SccId = std::uint32_t;

// Unlabeled simple directed graph produced by edge-level reduction: its edge
// set is exactly a pair relation, its vertex set exactly the endpoints.
// Self-loops are admitted (a v->v path satisfying R becomes edge (v, v)).
struct ReducedGraph {
    std::vector<VertexId> vertices;                       // sorted
    std::vector<std::pair<VertexId, VertexId>> edges;     // unique
    std::vector<std::vector<std::uint32_t>> adj;          // dense-index space
    std::unordered_map<VertexId, std::uint32_t> dense;    // vertex -> dense index

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }
    bool contains_vertex(VertexId v) const { return dense.contains(v); }
};

ReducedGraph edge_level_reduce(const PairRelation& r_g);

// SCC condensation of a reduced graph. SCC ids follow Tarjan completion
// order (reverse topological: every non-self-loop condensed edge goes from a
// higher id to a lower one), so outputs are deterministic across runs.
struct Condensation {
    SccId scc_count = 0;
    std::unordered_map<VertexId, SccId> scc_of;
    std::vector<std::vector<VertexId>> members;
    std::vector<std::pair<SccId, SccId>> condensed_edges; // unique, self-loops included
    std::vector<std::vector<SccId>> out;                  // condensed adjacency
    std::vector<bool> self_loop;
};

// Iterative single-pass Tarjan.
Condensation condense(const ReducedGraph& gr);

// Transitive closure of the condensed graph: (k, l) present iff a path of
// length >= 1 exists from SCC k to SCC l.
struct Rtc {
    std::vector<std::pair<SccId, SccId>> pairs;
    std::vector<std::vector<SccId>> reach; // by start SCC, sorted
};

// Reverse-topological reachability-set union over the condensation DAG.
// Bitset union when the condensed graph is small, sorted-list merge above
// 4096 SCCs.
Rtc compute_rtc(const Condensation& cond);

// Cartesian expansion of Theorem 1: union of members[k] x members[l] over
// RTC pairs. SCC member sets are disjoint, so pairs are appended without
// duplicate checks.
PairRelation expand_rtc(const Rtc& rtc, const Condensation& cond);

// Direct per-vertex BFS transitive closure of the reduced graph. The
// FullSharing route for R+, and the independent check for the expand_rtc
// pipeline.
PairRelation tc_by_bfs(const ReducedGraph& gr);

} // namespace rpq
