#include "rpq/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace rpq {

namespace {

// Thompson construction over an explicit epsilon-NFA.
struct EpsNfa {
    struct Arc {
        std::string label; // empty = epsilon
        std::uint32_t to;
    };
    std::vector<std::vector<Arc>> states;

    std::uint32_t add_state() {
        states.emplace_back();
        return static_cast<std::uint32_t>(states.size() - 1);
    }
    void arc(std::uint32_t from, std::string label, std::uint32_t to) {
        states[from].push_back({std::move(label), to});
    }
};

struct Frag {
    std::uint32_t in, out;
};

Frag build(EpsNfa& n, const AstPtr& a) {
    switch (a->kind) {
    case NodeKind::Label: {
        Frag f{n.add_state(), n.add_state()};
        n.arc(f.in, a->label, f.out);
        return f;
    }
    case NodeKind::Epsilon: {
        Frag f{n.add_state(), n.add_state()};
        n.arc(f.in, "", f.out);
        return f;
    }
    case NodeKind::Concat: {
        Frag first = build(n, a->children.front());
        std::uint32_t cur = first.out;
        for (std::size_t i = 1; i < a->children.size(); ++i) {
            Frag next = build(n, a->children[i]);
            n.arc(cur, "", next.in);
            cur = next.out;
        }
        return {first.in, cur};
    }
    case NodeKind::Alt: {
        Frag f{n.add_state(), n.add_state()};
        for (const AstPtr& c : a->children) {
            Frag b = build(n, c);
            n.arc(f.in, "", b.in);
            n.arc(b.out, "", f.out);
        }
        return f;
    }
    case NodeKind::Plus:
    case NodeKind::Star: {
        Frag body = build(n, a->children.front());
        Frag f{n.add_state(), n.add_state()};
        n.arc(f.in, "", body.in);
        n.arc(body.out, "", f.out);
        n.arc(body.out, "", body.in);
        if (a->kind == NodeKind::Star) n.arc(f.in, "", f.out);
        return f;
    }
    }
    return {0, 0};
}

std::vector<std::uint32_t> eps_closure(const EpsNfa& n, std::uint32_t s) {
    std::vector<std::uint32_t> stack{s};
    std::set<std::uint32_t> seen{s};
    while (!stack.empty()) {
        std::uint32_t t = stack.back();
        stack.pop_back();
        for (const auto& arc : n.states[t])
            if (arc.label.empty() && seen.insert(arc.to).second) stack.push_back(arc.to);
    }
    return {seen.begin(), seen.end()};
}

} // namespace

Nfa compile_nfa(const AstPtr& a) {
    EpsNfa eps;
    Frag root = build(eps, a);

    const std::uint32_t n = static_cast<std::uint32_t>(eps.states.size());
    std::vector<bool> accept(n, false);
    std::vector<std::set<std::pair<std::string, std::uint32_t>>> moves(n);
    for (std::uint32_t s = 0; s < n; ++s) {
        for (std::uint32_t t : eps_closure(eps, s)) {
            if (t == root.out) accept[s] = true;
            for (const auto& arc : eps.states[t])
                if (!arc.label.empty()) moves[s].insert({arc.label, arc.to});
        }
    }

    // Keep states reachable from the start through labeled moves.
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> remap(n, UINT32_MAX);
    std::deque<std::uint32_t> queue{root.in};
    remap[root.in] = 0;
    order.push_back(root.in);
    while (!queue.empty()) {
        std::uint32_t s = queue.front();
        queue.pop_front();
        for (const auto& [label, to] : moves[s]) {
            if (remap[to] == UINT32_MAX) {
                remap[to] = static_cast<std::uint32_t>(order.size());
                order.push_back(to);
                queue.push_back(to);
            }
        }
    }

    Nfa out;
    out.state_count = static_cast<std::uint32_t>(order.size());
    out.start = 0;
    out.accept.assign(out.state_count, false);
    for (std::uint32_t s : order) {
        out.accept[remap[s]] = accept[s];
        for (const auto& [label, to] : moves[s])
            out.transitions.push_back({remap[s], label, remap[to]});
    }
    return out;
}

bool Nfa::accepts_word(const std::vector<std::string>& word) const {
    std::set<std::uint32_t> cur{start};
    for (const std::string& sym : word) {
        std::set<std::uint32_t> next;
        for (const Transition& t : transitions)
            if (cur.contains(t.from) && t.label == sym) next.insert(t.to);
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    return std::any_of(cur.begin(), cur.end(), [&](std::uint32_t s) { return accept[s]; });
}

namespace {

// state -> label-id -> successor states, with graph-unknown labels dropped.
std::vector<std::vector<std::vector<std::uint32_t>>> bind_table(const Nfa& nfa,
                                                                const LabeledGraph& graph) {
    std::vector<std::vector<std::vector<std::uint32_t>>> table(
        nfa.state_count, std::vector<std::vector<std::uint32_t>>(graph.label_count()));
    for (const Nfa::Transition& t : nfa.transitions)
        if (auto id = graph.label_id(t.label)) table[t.from][*id].push_back(t.to);
    return table;
}

PairRelation identity_relation(std::size_t vertex_count) {
    PairRelation rel;
    for (VertexId v = 0; v < vertex_count; ++v) rel.append_unique(v, v);
    return rel;
}

// BFS over (vertex, state) pairs from one start vertex.
template <typename Emit>
void traverse(const LabeledGraph& graph, const Nfa& nfa,
              const std::vector<std::vector<std::vector<std::uint32_t>>>& table, VertexId start_v,
              std::vector<std::uint32_t>& stamps, std::uint32_t stamp, std::uint64_t* expansions,
              Emit&& emit) {
    const std::size_t nstates = nfa.state_count;
    std::deque<std::uint64_t> queue;
    auto visit = [&](VertexId v, std::uint32_t s) {
        std::uint32_t& cell = stamps[static_cast<std::size_t>(v) * nstates + s];
        if (cell == stamp) return;
        cell = stamp;
        if (nfa.accept[s]) emit(v);
        queue.push_back(pack_pair(v, s));
    };
    visit(start_v, nfa.start);
    while (!queue.empty()) {
        std::uint64_t packed = queue.front();
        queue.pop_front();
        VertexId v = static_cast<VertexId>(packed >> 32);
        std::uint32_t s = static_cast<std::uint32_t>(packed);
        if (expansions) ++*expansions;
        for (LabelId l = 0; l < graph.label_count(); ++l) {
            const auto& targets = table[s][l];
            if (targets.empty()) continue;
            for (VertexId w : graph.out(v, l))
                for (std::uint32_t t : targets) visit(w, t);
        }
    }
}

} // namespace

PairRelation eval_rpq_without_kc(const LabeledGraph& graph, const AstPtr& a,
                                 std::uint64_t* expansions) {
    if (is_epsilon(a)) return identity_relation(graph.vertex_count());

    Nfa nfa = compile_nfa(a);
    auto table = bind_table(nfa, graph);
    PairRelation result;
    std::vector<std::uint32_t> stamps(graph.vertex_count() * nfa.state_count, 0);
    for (VertexId v0 = 0; v0 < graph.vertex_count(); ++v0) {
        traverse(graph, nfa, table, v0, stamps, v0 + 1, expansions,
                 [&](VertexId end) { result.insert(v0, end); });
    }
    return result;
}

RestrictedEvaluator::RestrictedEvaluator(const LabeledGraph& graph, const AstPtr& post)
    : graph_(graph), epsilon_(is_epsilon(post)) {
    if (!epsilon_) {
        nfa_ = compile_nfa(post);
        table_ = bind_table(nfa_, graph);
        stamps_.assign(graph.vertex_count() * nfa_.state_count, 0);
    }
}

std::vector<VertexId> RestrictedEvaluator::ends_from(VertexId source) {
    if (epsilon_) return {source};
    std::vector<VertexId> ends;
    traverse(graph_, nfa_, table_, source, stamps_, ++next_stamp_, nullptr,
             [&](VertexId end) { ends.push_back(end); });
    return ends;
}

PairRelation eval_restricted_rpq(const LabeledGraph& graph, const AstPtr& post, VertexId source) {
    RestrictedEvaluator ev(graph, post);
    PairRelation rel;
    for (VertexId end : ev.ends_from(source)) rel.insert(source, end);
    return rel;
}

} // namespace rpq
