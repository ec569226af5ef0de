#include "rpq/oracle.hpp"

namespace rpq {

namespace {

// Private join so the oracle shares no evaluation code with the engine.
PairRelation naive_join(const PairRelation& left, const PairRelation& right) {
    PairRelation out;
    for (auto [a, mid] : left.pairs())
        for (auto [mid2, b] : right.pairs())
            if (mid == mid2) out.insert(a, b);
    return out;
}

PairRelation naive_union(const PairRelation& a, const PairRelation& b) {
    PairRelation out;
    for (auto [s, e] : a.pairs()) out.insert(s, e);
    for (auto [s, e] : b.pairs()) out.insert(s, e);
    return out;
}

PairRelation identity(std::size_t n) {
    PairRelation out;
    for (VertexId v = 0; v < n; ++v) out.insert(v, v);
    return out;
}

PairRelation eval(const LabeledGraph& graph, const AstPtr& a) {
    switch (a->kind) {
    case NodeKind::Label: {
        PairRelation out;
        if (auto id = graph.label_id(a->label)) {
            for (const Edge& e : graph.edges())
                if (e.label == *id) out.insert(e.src, e.dst);
        }
        return out;
    }
    case NodeKind::Epsilon:
        return identity(graph.vertex_count());
    case NodeKind::Concat: {
        PairRelation acc = eval(graph, a->children.front());
        for (std::size_t i = 1; i < a->children.size(); ++i)
            acc = naive_join(acc, eval(graph, a->children[i]));
        return acc;
    }
    case NodeKind::Alt: {
        PairRelation acc;
        for (const AstPtr& c : a->children) acc = naive_union(acc, eval(graph, c));
        return acc;
    }
    case NodeKind::Plus: {
        // Least fixed point of X = r ∪ (X ⋈ r); bounded by |V|^2 pairs.
        PairRelation r = eval(graph, a->children.front());
        PairRelation x = r;
        for (;;) {
            PairRelation next = naive_union(x, naive_join(x, r));
            if (next.size() == x.size()) return x;
            x = std::move(next);
        }
    }
    case NodeKind::Star:
        return naive_union(identity(graph.vertex_count()),
                           eval(graph, ast::plus(a->children.front())));
    }
    return {};
}

} // namespace

PairRelation oracle_eval(const LabeledGraph& graph, const AstPtr& a, OracleConfig config) {
    if (graph.vertex_count() > config.max_vertices)
        throw OracleError("oracle refuses graphs with more than " +
                          std::to_string(config.max_vertices) + " vertices");
    return eval(graph, a);
}

} // namespace rpq
