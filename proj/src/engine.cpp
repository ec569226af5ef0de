#include "rpq/engine.hpp"

#include <chrono>
#include <mutex>
#include <unordered_set>

#include "rpq/nfa.hpp"

namespace rpq {

namespace {

using Clock = std::chrono::steady_clock;

double us_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

PairRelation identity_over_all(const LabeledGraph& graph) {
    PairRelation rel;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) rel.append_unique(v, v);
    return rel;
}

void union_into(PairRelation& acc, const PairRelation& other) {
    for (auto [s, e] : other.pairs()) acc.insert(s, e);
}

} // namespace

EvalStats& EvalStats::operator+=(const EvalStats& o) {
    rtc_computations += o.rtc_computations;
    cache_hits += o.cache_hits;
    eq7_inserts += o.eq7_inserts;
    eq7_dup_skips += o.eq7_dup_skips;
    eq8_inserts += o.eq8_inserts;
    eq8_dup_skips += o.eq8_dup_skips;
    eq9_pairs += o.eq9_pairs;
    post_probes += o.post_probes;
    eq10_dup_checks += o.eq10_dup_checks;
    join_probes += o.join_probes;
    traversal_expansions += o.traversal_expansions;
    shared_pairs += o.shared_pairs;
    t_shared_us += o.t_shared_us;
    t_prejoin_us += o.t_prejoin_us;
    t_total_us += o.t_total_us;
    return *this;
}

RtcCache::EntryPtr RtcCache::find(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        ++misses_;
        return nullptr;
    }
    ++hits_;
    return it->second;
}

RtcCache::EntryPtr RtcCache::insert(const std::string& key, Entry entry) {
    auto ptr = std::make_shared<const Entry>(std::move(entry));
    std::unique_lock lock(mu_);
    auto [it, fresh] = entries_.emplace(key, ptr);
    return it->second; // first insert wins
}

std::size_t RtcCache::size() const {
    std::shared_lock lock(mu_);
    return entries_.size();
}

PairRelation join_concat(const PairRelation& left, const PairRelation& right,
                         std::uint64_t* probes) {
    PairRelation out;
    for (auto [a, mid] : left.pairs()) {
        if (probes) ++*probes;
        for (VertexId b : right.ends_of(mid)) {
            if (probes) ++*probes;
            out.insert(a, b);
        }
    }
    return out;
}

PairRelation eval_batch_unit(const PairRelation& pre_g, const Rtc& rtc, const Condensation& cond,
                             ClosureType type, const AstPtr& post, const LabeledGraph& graph,
                             EvalStats& stats) {
    PairRelation res9;
    const bool star = type == ClosureType::Star;
    if (star) {
        // Pre·R*·Post: seed with Pre_G itself. The star seed breaks the
        // disjoint-SCC-product guarantee, so star insertions are checked.
        for (auto [s, e] : pre_g.pairs()) res9.insert(s, e);
    }

    std::unordered_set<std::uint64_t> res7, res8;
    const auto t0 = Clock::now();
    for (auto [vi, vj] : pre_g.pairs()) {
        auto it = cond.scc_of.find(vj);
        if (it == cond.scc_of.end()) continue; // useless-1: vj outside V_R
        const SccId sj = it->second;
        ++stats.join_probes;
        if (!res7.insert(pack_pair(vi, sj)).second) {
            ++stats.eq7_dup_skips; // redundant-1
            continue;
        }
        ++stats.eq7_inserts;
        for (SccId sk : rtc.reach[sj]) {
            ++stats.join_probes;
            if (!res8.insert(pack_pair(vi, sk)).second) {
                ++stats.eq8_dup_skips; // redundant-2
                continue;
            }
            ++stats.eq8_inserts;
            for (VertexId vk : cond.members[sk]) {
                ++stats.join_probes;
                if (star)
                    res9.insert(vi, vk);
                else
                    res9.append_unique(vi, vk); // useless-2: no duplicate check
            }
        }
    }
    stats.t_prejoin_us += us_since(t0);
    stats.eq9_pairs += res9.size();

    PairRelation res10;
    RestrictedEvaluator ev(graph, post);
    std::unordered_map<VertexId, std::vector<VertexId>> memo;
    for (auto [vi, vk] : res9.pairs()) {
        auto [it, fresh] = memo.try_emplace(vk);
        if (fresh) it->second = ev.ends_from(vk);
        ++stats.post_probes;
        for (VertexId vl : it->second) {
            ++stats.eq10_dup_checks;
            res10.insert(vi, vl);
        }
    }
    return res10;
}

PairRelation rtc_sharing(const LabeledGraph& graph, const AstPtr& query, RtcCache& cache,
                         EvalStats* stats) {
    EvalStats scratch;
    EvalStats& st = stats ? *stats : scratch;

    PairRelation result;
    bool first = true;
    for (const AstPtr& clause : to_dnf(query)) {
        Clause dec = decompose_clause(clause);
        PairRelation clause_g;
        if (dec.type == ClosureType::None) {
            clause_g = eval_rpq_without_kc(graph, dec.post, &st.traversal_expansions);
        } else {
            const std::string key = canonical_text(dec.r);
            RtcCache::EntryPtr entry = cache.find(key);
            if (!entry) {
                PairRelation r_g = rtc_sharing(graph, dec.r, cache, &st);
                const auto t0 = Clock::now();
                RtcCache::Entry e;
                e.graph = edge_level_reduce(r_g);
                e.cond = condense(e.graph);
                e.rtc = compute_rtc(e.cond);
                st.t_shared_us += us_since(t0);
                ++st.rtc_computations;
                entry = cache.insert(key, std::move(e));
            } else {
                ++st.cache_hits;
            }
            st.shared_pairs += entry->rtc.pairs.size();

            PairRelation pre_g;
            if (is_epsilon(dec.pre)) {
                // ε prefix: a Kleene-plus path can only start inside V_R,
                // while R* additionally yields every (v, v).
                if (dec.type == ClosureType::Plus) {
                    for (VertexId v : entry->graph.vertices) pre_g.append_unique(v, v);
                } else {
                    pre_g = identity_over_all(graph);
                }
            } else {
                pre_g = rtc_sharing(graph, dec.pre, cache, &st);
            }
            clause_g = eval_batch_unit(pre_g, entry->rtc, entry->cond, dec.type, dec.post, graph,
                                       st);
        }
        if (first) {
            result = std::move(clause_g);
            first = false;
        } else {
            union_into(result, clause_g);
        }
    }
    return result;
}

namespace {

PairRelation full_eval(const LabeledGraph& graph, const AstPtr& query, SharedClosures& shared,
                       EvalStats& st) {
    PairRelation result;
    bool first = true;
    for (const AstPtr& clause : to_dnf(query)) {
        Clause dec = decompose_clause(clause);
        PairRelation clause_g;
        if (dec.type == ClosureType::None) {
            clause_g = eval_rpq_without_kc(graph, dec.post, &st.traversal_expansions);
        } else {
            const std::string key = canonical_text(dec.r);
            std::shared_ptr<const PairRelation> rplus;
            if (auto it = shared.find(key); it != shared.end()) {
                rplus = it->second;
                ++st.cache_hits;
            } else {
                PairRelation r_g = full_eval(graph, dec.r, shared, st);
                const auto t0 = Clock::now();
                ReducedGraph gr = edge_level_reduce(r_g);
                auto ptr = std::make_shared<const PairRelation>(tc_by_bfs(gr));
                st.t_shared_us += us_since(t0);
                ++st.rtc_computations;
                shared.emplace(key, ptr);
                rplus = ptr;
            }
            st.shared_pairs += rplus->size();

            PairRelation pre_g = is_epsilon(dec.pre) ? identity_over_all(graph)
                                                     : full_eval(graph, dec.pre, shared, st);
            PairRelation post_g =
                is_epsilon(dec.post)
                    ? identity_over_all(graph)
                    : eval_rpq_without_kc(graph, dec.post, &st.traversal_expansions);

            const auto t0 = Clock::now();
            PairRelation mid = join_concat(pre_g, *rplus, &st.join_probes);
            st.t_prejoin_us += us_since(t0);
            if (dec.type == ClosureType::Star) union_into(mid, pre_g);
            clause_g = join_concat(mid, post_g, &st.join_probes);
        }
        if (first) {
            result = std::move(clause_g);
            first = false;
        } else {
            union_into(result, clause_g);
        }
    }
    return result;
}

} // namespace

std::vector<PairRelation> full_sharing(const LabeledGraph& graph,
                                       const std::vector<AstPtr>& queries, SharedClosures& shared,
                                       std::vector<EvalStats>* stats) {
    std::vector<PairRelation> results;
    results.reserve(queries.size());
    for (const AstPtr& q : queries) {
        EvalStats st;
        const auto t0 = Clock::now();
        results.push_back(full_eval(graph, q, shared, st));
        st.t_total_us = us_since(t0);
        if (stats) stats->push_back(st);
    }
    return results;
}

std::vector<PairRelation> no_sharing(const LabeledGraph& graph, const std::vector<AstPtr>& queries,
                                     std::vector<EvalStats>* stats) {
    std::vector<PairRelation> results;
    results.reserve(queries.size());
    for (const AstPtr& q : queries) {
        EvalStats st;
        const auto t0 = Clock::now();
        results.push_back(eval_rpq_without_kc(graph, q, &st.traversal_expansions));
        st.t_total_us = us_since(t0);
        if (stats) stats->push_back(st);
    }
    return results;
}

} // namespace rpq
