#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace rpq {

using VertexId = std::uint32_t;
using LabelId = std::uint32_t;

inline std::uint64_t pack_pair(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

// A set of ordered vertex pairs. This is the universal intermediate and
// result shape of the whole library. Insertion is single-writer; a completed
// relation is shareable read-only.
//
// append_unique() skips the membership check. The caller must guarantee the
// pair is new; debug builds verify the claim when the set is next rebuilt.
class PairRelation {
public:
    PairRelation() = default;

    // Insert with duplicate check. Returns true if the pair was new.
    bool insert(VertexId start, VertexId end) {
        ensure_set();
        if (!set_.insert(pack_pair(start, end)).second) return false;
        pairs_.emplace_back(start, end);
        index_valid_ = false;
        return true;
    }

    // Append without a duplicate check.
    void append_unique(VertexId start, VertexId end) {
        pairs_.emplace_back(start, end);
        set_valid_ = false;
        index_valid_ = false;
    }

    bool contains(VertexId start, VertexId end) const {
        ensure_set();
        return set_.contains(pack_pair(start, end));
    }

    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    const std::vector<std::pair<VertexId, VertexId>>& pairs() const { return pairs_; }

    // End vertices reachable from `start`; the index is built on first probe.
    std::span<const VertexId> ends_of(VertexId start) const {
        ensure_index();
        auto it = index_.find(start);
        if (it == index_.end()) return {};
        return it->second;
    }

    friend bool operator==(const PairRelation& a, const PairRelation& b) {
        if (a.size() != b.size()) return false;
        a.ensure_set();
        for (auto [s, e] : b.pairs_)
            if (!a.set_.contains(pack_pair(s, e))) return false;
        return true;
    }

private:
    void ensure_set() const {
        if (set_valid_) return;
        set_.clear();
        set_.reserve(pairs_.size());
        for (auto [s, e] : pairs_) set_.insert(pack_pair(s, e));
        assert(set_.size() == pairs_.size() && "append_unique violated uniqueness");
        set_valid_ = true;
    }

    void ensure_index() const {
        if (index_valid_) return;
        index_.clear();
        for (auto [s, e] : pairs_) index_[s].push_back(e);
        index_valid_ = true;
    }

    std::vector<std::pair<VertexId, VertexId>> pairs_;
    mutable std::unordered_set<std::uint64_t> set_;
    mutable std::unordered_map<VertexId, std::vector<VertexId>> index_;
    mutable bool set_valid_ = true;
    mutable bool index_valid_ = false;
};

} // namespace rpq
