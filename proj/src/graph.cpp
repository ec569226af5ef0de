#include "rpq/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace rpq {

LabeledGraph::LabeledGraph(std::size_t vertex_count, std::vector<std::string> labels,
                           std::vector<Edge> edges)
    : vertex_count_(vertex_count), labels_(std::move(labels)), edges_(std::move(edges)) {
    for (LabelId i = 0; i < labels_.size(); ++i) {
        if (!label_ids_.emplace(labels_[i], i).second)
            throw GraphError("duplicate label name: " + labels_[i]);
    }
    for (const Edge& e : edges_) {
        if (e.src >= vertex_count_ || e.dst >= vertex_count_)
            throw GraphError("edge endpoint out of range");
        if (e.label >= labels_.size())
            throw GraphError("edge label out of range");
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
    });
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(vertex_count_ * labels_.size(), {});
    label_edge_counts_.assign(labels_.size(), 0);
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.src) * labels_.size() + e.label].push_back(e.dst);
        ++label_edge_counts_[e.label];
    }
}

std::optional<LabelId> LabeledGraph::label_id(std::string_view name) const {
    auto it = label_ids_.find(std::string(name));
    if (it == label_ids_.end()) return std::nullopt;
    return it->second;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == '\t' || line[i] == ' ')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != '\t' && line[j] != ' ') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

VertexId parse_vertex(std::string_view tok, const std::string& origin, std::size_t lineno) {
    VertexId v{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw GraphError(origin + ":" + std::to_string(lineno) +
                         ": not an integer vertex id: '" + std::string(tok) + "'");
    return v;
}

} // namespace

LabeledGraph parse_edge_list(std::string_view text, const std::string& origin) {
    struct RawEdge {
        VertexId src;
        std::string label;
        VertexId dst;
    };
    std::vector<RawEdge> raw;
    std::set<std::string> label_set;
    VertexId max_id = 0;
    bool any = false;

    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        auto fields = split_fields(line);
        if (fields.size() != 3)
            throw GraphError(origin + ":" + std::to_string(lineno) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        VertexId src = parse_vertex(fields[0], origin, lineno);
        VertexId dst = parse_vertex(fields[2], origin, lineno);
        raw.push_back({src, std::string(fields[1]), dst});
        label_set.insert(std::string(fields[1]));
        max_id = std::max({max_id, src, dst});
        any = true;
    }

    std::vector<std::string> labels(label_set.begin(), label_set.end());
    std::unordered_map<std::string, LabelId> ids;
    for (LabelId i = 0; i < labels.size(); ++i) ids.emplace(labels[i], i);

    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const RawEdge& e : raw) edges.push_back({e.src, ids[e.label], e.dst});

    return LabeledGraph(any ? static_cast<std::size_t>(max_id) + 1 : 0, std::move(labels),
                        std::move(edges));
}

LabeledGraph load_edge_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_edge_list(ss.str(), path);
}

std::vector<std::string> default_label_names(unsigned label_count) {
    std::vector<std::string> labels;
    labels.reserve(label_count);
    for (unsigned i = 0; i < label_count; ++i) {
        if (i < 26)
            labels.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            labels.push_back("l" + std::to_string(i));
    }
    return labels;
}

LabeledGraph generate_rmat(unsigned scale, unsigned edge_factor, unsigned label_count,
                           std::uint64_t seed) {
    if (scale < 1) throw GraphError("rmat: scale must be >= 1");
    if (label_count < 1) throw GraphError("rmat: label_count must be >= 1");

    const std::size_t n = std::size_t{1} << scale;
    const std::size_t samples = std::size_t{1} << (scale + edge_factor);
    // Standard R-MAT quadrant probabilities.
    constexpr double pa = 0.57, pb = 0.19, pc = 0.19;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<LabelId> label_dist(0, label_count - 1);

    std::vector<Edge> edges;
    edges.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        VertexId src = 0, dst = 0;
        for (unsigned level = 0; level < scale; ++level) {
            double r = unit(rng);
            src <<= 1;
            dst <<= 1;
            if (r < pa) {
                // top-left
            } else if (r < pa + pb) {
                dst |= 1;
            } else if (r < pa + pb + pc) {
                src |= 1;
            } else {
                src |= 1;
                dst |= 1;
            }
        }
        edges.push_back({src, label_dist(rng), dst});
    }
    return LabeledGraph(n, default_label_names(label_count), std::move(edges));
}

} // namespace rpq
