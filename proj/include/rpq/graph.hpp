#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rpq/relation.hpp"

namespace rpq {

struct Edge {
    VertexId src;
    LabelId label;
    VertexId dst;

    friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge-labeled directed multigraph. Multiple edges between the same vertex
// pair are allowed but their labels must be distinct; exact duplicate
// (src, label, dst) triples are deduplicated at construction. Immutable
// after construction and safe to share across threads.
class LabeledGraph {
public:
    LabeledGraph() = default;

    // `labels` fixes the alphabet; `edges` may contain duplicates.
    // Endpoints must be < vertex_count and labels < labels.size().
    LabeledGraph(std::size_t vertex_count, std::vector<std::string> labels,
                 std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t label_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t edge_count(LabelId label) const { return label_edge_counts_.at(label); }

    std::optional<LabelId> label_id(std::string_view name) const;
    const std::string& label_name(LabelId id) const { return labels_.at(id); }
    const std::vector<std::string>& labels() const { return labels_; }

    // Successors of `v` through edges labeled `label`.
    std::span<const VertexId> out(VertexId v, LabelId label) const {
        return adj_[static_cast<std::size_t>(v) * labels_.size() + label];
    }

    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, LabelId> label_ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::size_t> label_edge_counts_;
};

// Parse a TSV edge list (src, label, dst per line; `#` comments; TAB or
// space-run separators). Vertices are 0..max-id; the alphabet is the sorted
// set of labels seen. Throws GraphError with a line number on malformed input.
LabeledGraph load_edge_list(const std::string& path);
LabeledGraph parse_edge_list(std::string_view text, const std::string& origin = "<string>");

// Recursive-quadrant R-MAT sampler: 2^scale vertices, 2^(scale+edge_factor)
// edge draws with quadrant probabilities (0.57, 0.19, 0.19, 0.05), uniform
// random labels, exact duplicates discarded. Deterministic under `seed`.
LabeledGraph generate_rmat(unsigned scale, unsigned edge_factor,
                           unsigned label_count, std::uint64_t seed);

// "a", "b", ..., "z", "l26", ... — the alphabet generate_rmat assigns.
std::vector<std::string> default_label_names(unsigned label_count);

} // namespace rpq
