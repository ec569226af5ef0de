#include "rpq/reduction.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace rpq {

ReducedGraph edge_level_reduce(const PairRelation& r_g) {
    ReducedGraph gr;
    gr.edges = r_g.pairs();
    std::sort(gr.edges.begin(), gr.edges.end());

    for (auto [s, e] : gr.edges) {
        gr.vertices.push_back(s);
        gr.vertices.push_back(e);
    }
    std::sort(gr.vertices.begin(), gr.vertices.end());
    gr.vertices.erase(std::unique(gr.vertices.begin(), gr.vertices.end()), gr.vertices.end());

    gr.dense.reserve(gr.vertices.size());
    for (std::uint32_t i = 0; i < gr.vertices.size(); ++i) gr.dense.emplace(gr.vertices[i], i);

    gr.adj.assign(gr.vertices.size(), {});
    for (auto [s, e] : gr.edges) gr.adj[gr.dense.at(s)].push_back(gr.dense.at(e));
    return gr;
}

Condensation condense(const ReducedGraph& gr) {
    const std::uint32_t n = static_cast<std::uint32_t>(gr.vertex_count());
    constexpr std::uint32_t kUnset = UINT32_MAX;

    Condensation cond;
    std::vector<std::uint32_t> index(n, kUnset), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::vector<SccId> scc_of_dense(n, kUnset);
    std::uint32_t next_index = 0;

    // Tarjan with an explicit frame stack; SCC ids assigned in completion
    // order.
    struct Frame {
        std::uint32_t v;
        std::size_t child;
    };
    std::vector<Frame> frames;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        frames.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < gr.adj[f.v].size()) {
                std::uint32_t w = gr.adj[f.v][f.child++];
                if (index[w] == kUnset) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                std::uint32_t v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    SccId id = cond.scc_count++;
                    cond.members.emplace_back();
                    for (;;) {
                        std::uint32_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        scc_of_dense[w] = id;
                        cond.members[id].push_back(gr.vertices[w]);
                        if (w == v) break;
                    }
                    std::sort(cond.members[id].begin(), cond.members[id].end());
                }
            }
        }
    }

    cond.scc_of.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) cond.scc_of.emplace(gr.vertices[i], scc_of_dense[i]);

    std::set<std::pair<SccId, SccId>> edge_set;
    for (auto [s, e] : gr.edges)
        edge_set.emplace(scc_of_dense[gr.dense.at(s)], scc_of_dense[gr.dense.at(e)]);
    cond.condensed_edges.assign(edge_set.begin(), edge_set.end());

    cond.out.assign(cond.scc_count, {});
    cond.self_loop.assign(cond.scc_count, false);
    for (auto [a, b] : cond.condensed_edges) {
        cond.out[a].push_back(b);
        if (a == b) cond.self_loop[a] = true;
    }
    return cond;
}

namespace {

Rtc compute_rtc_bitset(const Condensation& cond) {
    const std::uint32_t n = cond.scc_count;
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(n, std::vector<std::uint64_t>(words, 0));

    // Non-self-loop condensed edges go from higher to lower SCC id, so
    // increasing id order is reverse topological.
    for (std::uint32_t s = 0; s < n; ++s) {
        auto& row = bits[s];
        for (SccId t : cond.out[s]) {
            if (t == s) continue;
            row[t / 64] |= std::uint64_t{1} << (t % 64);
            for (std::size_t w = 0; w < words; ++w) row[w] |= bits[t][w];
        }
        if (cond.self_loop[s]) row[s / 64] |= std::uint64_t{1} << (s % 64);
    }

    Rtc rtc;
    rtc.reach.assign(n, {});
    for (std::uint32_t s = 0; s < n; ++s) {
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = bits[s][w];
            while (word) {
                std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(word));
                word &= word - 1;
                SccId t = static_cast<SccId>(w * 64 + bit);
                rtc.reach[s].push_back(t);
                rtc.pairs.emplace_back(s, t);
            }
        }
    }
    return rtc;
}

std::vector<SccId> merge_union(const std::vector<SccId>& a, const std::vector<SccId>& b) {
    std::vector<SccId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Rtc compute_rtc_lists(const Condensation& cond) {
    const std::uint32_t n = cond.scc_count;
    Rtc rtc;
    rtc.reach.assign(n, {});
    for (std::uint32_t s = 0; s < n; ++s) {
        std::vector<SccId> acc;
        for (SccId t : cond.out[s]) {
            if (t == s) continue;
            acc = merge_union(acc, merge_union({t}, rtc.reach[t]));
        }
        if (cond.self_loop[s]) acc = merge_union(acc, {s});
        rtc.reach[s] = std::move(acc);
        for (SccId t : rtc.reach[s]) rtc.pairs.emplace_back(s, t);
    }
    return rtc;
}

} // namespace

Rtc compute_rtc(const Condensation& cond) {
    return cond.scc_count <= 4096 ? compute_rtc_bitset(cond) : compute_rtc_lists(cond);
}

PairRelation expand_rtc(const Rtc& rtc, const Condensation& cond) {
    PairRelation rel;
    for (auto [k, l] : rtc.pairs)
        for (VertexId a : cond.members[k])
            for (VertexId b : cond.members[l]) rel.append_unique(a, b);
    return rel;
}

PairRelation tc_by_bfs(const ReducedGraph& gr) {
    const std::uint32_t n = static_cast<std::uint32_t>(gr.vertex_count());
    PairRelation rel;
    std::vector<std::uint32_t> stamps(n, 0);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < n; ++u) {
        const std::uint32_t stamp = u + 1;
        // Seed with successors: a vertex reaches itself only through a
        // cycle of length >= 1.
        for (std::uint32_t w : gr.adj[u])
            if (stamps[w] != stamp) {
                stamps[w] = stamp;
                rel.insert(gr.vertices[u], gr.vertices[w]);
                queue.push_back(w);
            }
        while (!queue.empty()) {
            std::uint32_t v = queue.front();
            queue.pop_front();
            for (std::uint32_t w : gr.adj[v])
                if (stamps[w] != stamp) {
                    stamps[w] = stamp;
                    rel.insert(gr.vertices[u], gr.vertices[w]);
                    queue.push_back(w);
                }
        }
    }
    return rel;
}

} // namespace rpq
