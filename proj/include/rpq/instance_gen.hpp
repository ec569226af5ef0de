#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rpq/ast.hpp"
#include "rpq/graph.hpp"

namespace rpq {

// Random (graph, query) instances for equivalence sweeps. Used by the
// oracle-check CLI subcommand and by the property tests.

struct InstanceParams {
    unsigned max_scale = 4;       // graph has 2^scale vertices, scale in 1..max_scale
    unsigned max_edge_factor = 3; // edge draws = 2^(scale+f), f in 0..max_edge_factor
    unsigned max_labels = 4;
    unsigned max_pre = 2;  // concatenation length of Pre (0 = epsilon)
    unsigned max_r = 3;    // concatenation length of R (>= 1)
    unsigned max_post = 1; // concatenation length of Post (0 = epsilon)
};

struct Instance {
    LabeledGraph graph;
    AstPtr query;
    std::string query_text;
};

// Random batch unit Pre·R^{+|*}·Post over the given alphabet.
AstPtr random_batch_unit(std::mt19937_64& rng, const std::vector<std::string>& labels,
                         unsigned max_pre, unsigned max_r, unsigned max_post);

// Random regular expression of bounded depth over the given alphabet
// (labels, concat, alt, plus, star).
AstPtr random_ast(std::mt19937_64& rng, const std::vector<std::string>& labels, unsigned depth);

Instance random_instance(std::mt19937_64& rng, const InstanceParams& params = {});

} // namespace rpq
