#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rpq/ast.hpp"
#include "rpq/graph.hpp"
#include "rpq/relation.hpp"

namespace rpq {

// Epsilon-free NFA over label names. Compiled once per query, then bound to
// a graph's label ids for traversal.
struct Nfa {
    struct Transition {
        std::uint32_t from;
        std::string label;
        std::uint32_t to;
    };

    std::uint32_t state_count = 0;
    std::uint32_t start = 0;
    std::vector<bool> accept;
    std::vector<Transition> transitions;

    bool accepts_word(const std::vector<std::string>& word) const;
};

// Thompson construction followed by epsilon-closure elimination.
Nfa compile_nfa(const AstPtr& a);

// Product-automaton BFS from every vertex. A (vertex, state) pair already
// visited for the current start vertex is not re-expanded. Handles closures,
// so it doubles as the NoSharing evaluation core. `expansions`, when given,
// accumulates the number of (vertex, state) pairs expanded.
PairRelation eval_rpq_without_kc(const LabeledGraph& graph, const AstPtr& a,
                                 std::uint64_t* expansions = nullptr);

// Reusable single-source evaluator for the closure-free Post of a batch
// unit: binds the compiled NFA to the graph once, then answers
// "ends of paths satisfying post from v" per source vertex.
class RestrictedEvaluator {
public:
    RestrictedEvaluator(const LabeledGraph& graph, const AstPtr& post);

    // End vertices of paths from `source` satisfying post. For an Epsilon
    // post this is {source}.
    std::vector<VertexId> ends_from(VertexId source);

private:
    const LabeledGraph& graph_;
    bool epsilon_ = false;
    Nfa nfa_;
    // state -> label-id -> successor states
    std::vector<std::vector<std::vector<std::uint32_t>>> table_;
    // visited stamps reused across calls; one evaluator per thread
    std::vector<std::uint32_t> stamps_;
    std::uint32_t next_stamp_ = 0;
};

// {(source, v)} for every path source -> v satisfying `post`.
PairRelation eval_restricted_rpq(const LabeledGraph& graph, const AstPtr& post, VertexId source);

} // namespace rpq
