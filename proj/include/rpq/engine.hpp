#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "rpq/ast.hpp"
#include "rpq/graph.hpp"
#include "rpq/reduction.hpp"
#include "rpq/relation.hpp"

namespace rpq {

// Per-query counters and three-part phase times (microseconds).
// t_shared_us covers shared-structure computation (RTC or full closure,
// excluding the evaluation of R itself); t_prejoin_us covers the
// Pre ⋈ R+ part; the remainder is derived as total minus both.
struct EvalStats {
    std::uint64_t rtc_computations = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t eq7_inserts = 0;
    std::uint64_t eq7_dup_skips = 0;
    std::uint64_t eq8_inserts = 0;
    std::uint64_t eq8_dup_skips = 0;
    std::uint64_t eq9_pairs = 0;
    std::uint64_t post_probes = 0;
    std::uint64_t eq10_dup_checks = 0;
    std::uint64_t join_probes = 0;          // Pre ⋈ R+ probe/emission count
    std::uint64_t traversal_expansions = 0; // automaton (vertex, state) expansions
    std::uint64_t shared_pairs = 0;         // size of shared data used by this query
    double t_shared_us = 0;
    double t_prejoin_us = 0;
    double t_total_us = 0;

    EvalStats& operator+=(const EvalStats& o);
};

// Shared RTCs keyed by the canonical text of R. A key, once inserted, is
// never recomputed. Read-mostly concurrent access is tolerated: lookups take
// a shared lock and the first insert of a key wins.
class RtcCache {
public:
    struct Entry {
        ReducedGraph graph;
        Condensation cond;
        Rtc rtc;
    };
    using EntryPtr = std::shared_ptr<const Entry>;

    EntryPtr find(const std::string& key) const;
    // Returns the stored entry (the previous one if the key already exists).
    EntryPtr insert(const std::string& key, Entry entry);

    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }
    std::size_t size() const;

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, EntryPtr> entries_;
    mutable std::atomic<std::uint64_t> hits_ = 0, misses_ = 0;
};

// Hash equi-join on left.end = right.start, deduplicated. Each match scan
// counts one probe.
PairRelation join_concat(const PairRelation& left, const PairRelation& right,
                         std::uint64_t* probes = nullptr);

// Recursive clause-at-a-time evaluation sharing RTCs across queries.
PairRelation rtc_sharing(const LabeledGraph& graph, const AstPtr& query, RtcCache& cache,
                         EvalStats* stats = nullptr);

// One batch unit Pre·R^type·Post evaluated through the RTC with the
// useless/redundant-operation eliminations. `pre_g` must already be the
// evaluation of Pre on the graph; `post` must be closure-free.
PairRelation eval_batch_unit(const PairRelation& pre_g, const Rtc& rtc, const Condensation& cond,
                             ClosureType type, const AstPtr& post, const LabeledGraph& graph,
                             EvalStats& stats);

// Baseline sharing the full R+ relation (per-vertex BFS closure of the
// reduced graph) across queries, joined with no SCC-based eliminations.
using SharedClosures = std::unordered_map<std::string, std::shared_ptr<const PairRelation>>;
std::vector<PairRelation> full_sharing(const LabeledGraph& graph,
                                       const std::vector<AstPtr>& queries, SharedClosures& shared,
                                       std::vector<EvalStats>* stats = nullptr);

// Baseline evaluating every query independently with the full automaton.
std::vector<PairRelation> no_sharing(const LabeledGraph& graph,
                                     const std::vector<AstPtr>& queries,
                                     std::vector<EvalStats>* stats = nullptr);

} // namespace rpq
