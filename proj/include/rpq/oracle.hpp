#pragma once

#include <cstddef>
#include <stdexcept>

#include "rpq/ast.hpp"
#include "rpq/graph.hpp"
#include "rpq/relation.hpp"

namespace rpq {

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleConfig {
    std::size_t max_vertices = 64;
};

// Brute-force ground truth by structural recursion with fixed-point closure
// semantics. Deliberately naive and deliberately independent of the
// automaton and engine code paths. Refuses graphs larger than
// config.max_vertices.
PairRelation oracle_eval(const LabeledGraph& graph, const AstPtr& a, OracleConfig config = {});

} // namespace rpq
