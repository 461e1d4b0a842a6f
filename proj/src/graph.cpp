#include "tranet/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <tuple>

#include "tranet/errors.hpp"

namespace tranet {

std::int32_t Graph::index_of(const std::string& id) const {
    auto it = id_to_index_.find(id);
    return it == id_to_index_.end() ? -1 : it->second;
}

std::span<const std::int32_t> Graph::out_neighbors(std::int32_t v) const {
    const auto b = static_cast<std::size_t>(out_.offsets[v]);
    const auto e = static_cast<std::size_t>(out_.offsets[v + 1]);
    return {out_.neighbors.data() + b, e - b};
}

std::span<const std::int32_t> Graph::in_neighbors(std::int32_t v) const {
    const auto b = static_cast<std::size_t>(in_.offsets[v]);
    const auto e = static_cast<std::size_t>(in_.offsets[v + 1]);
    return {in_.neighbors.data() + b, e - b};
}

std::span<const std::int8_t> Graph::out_signs(std::int32_t v) const {
    const auto b = static_cast<std::size_t>(out_.offsets[v]);
    const auto e = static_cast<std::size_t>(out_.offsets[v + 1]);
    return {out_.signs.data() + b, e - b};
}

bool Graph::has_self_loop(std::int32_t v) const {
    const auto nbrs = out_neighbors(v);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::int32_t> Graph::neighbors(std::int32_t v, Direction dir) const {
    if (v < 0 || v >= node_count()) throw DataError("neighbors: node index out of range");
    switch (dir) {
    case Direction::out: {
        auto s = out_neighbors(v);
        return {s.begin(), s.end()};
    }
    case Direction::in: {
        auto s = in_neighbors(v);
        return {s.begin(), s.end()};
    }
    case Direction::all: {
        auto a = out_neighbors(v);
        auto b = in_neighbors(v);
        std::vector<std::int32_t> merged;
        merged.reserve(a.size() + b.size());
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
        std::erase(merged, v);
        return merged;
    }
    }
    throw ConfigError("neighbors: invalid direction");
}

Graph Graph::undirected_view() const {
    GraphBuilder builder;
    for (std::int32_t v = 0; v < node_count(); ++v) builder.ensure_node(node_id(v));
    for (std::int32_t v = 0; v < node_count(); ++v) {
        for (std::int32_t u : out_neighbors(v)) {
            if (u == v) continue;
            builder.add_edge(node_id(v), node_id(u), 1);
            builder.add_edge(node_id(u), node_id(v), 1);
        }
    }
    Graph g = builder.build();
    // Multiplicities collapse to 1 in the projection.
    std::fill(g.out_.multiplicities.begin(), g.out_.multiplicities.end(), 1);
    std::fill(g.in_.multiplicities.begin(), g.in_.multiplicities.end(), 1);
    return g;
}

void Graph::serialize(std::ostream& os, bool with_signs, char delimiter) const {
    for (std::int32_t v = 0; v < node_count(); ++v) {
        const auto b = static_cast<std::size_t>(out_.offsets[v]);
        const auto e = static_cast<std::size_t>(out_.offsets[v + 1]);
        for (std::size_t j = b; j < e; ++j) {
            for (std::int32_t rep = 0; rep < out_.multiplicities[j]; ++rep) {
                os << node_id(v) << delimiter << node_id(out_.neighbors[j]);
                if (with_signs) os << delimiter << static_cast<int>(out_.signs[j]);
                os << '\n';
            }
        }
    }
}

bool Graph::operator==(const Graph& other) const {
    if (node_count() != other.node_count() || edge_count() != other.edge_count()) return false;

    auto sorted_ids = [](const Graph& g) {
        std::vector<std::string> ids = g.ids_;
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    if (sorted_ids(*this) != sorted_ids(other)) return false;

    using EdgeKey = std::tuple<std::string, std::string, int, std::int32_t>;
    auto edge_set = [](const Graph& g) {
        std::vector<EdgeKey> edges;
        edges.reserve(static_cast<std::size_t>(g.edge_count()));
        for (std::int32_t v = 0; v < g.node_count(); ++v) {
            const auto b = static_cast<std::size_t>(g.out_.offsets[v]);
            const auto e = static_cast<std::size_t>(g.out_.offsets[v + 1]);
            for (std::size_t j = b; j < e; ++j) {
                edges.emplace_back(g.node_id(v), g.node_id(g.out_.neighbors[j]),
                                   g.out_.signs[j], g.out_.multiplicities[j]);
            }
        }
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    return edge_set(*this) == edge_set(other);
}

std::int32_t GraphBuilder::intern(const std::string& id) {
    auto [it, inserted] = id_to_index_.try_emplace(id, static_cast<std::int32_t>(ids_.size()));
    if (inserted) ids_.push_back(id);
    return it->second;
}

void GraphBuilder::ensure_node(const std::string& id) { intern(id); }

void GraphBuilder::ensure_nodes_indexed(std::int32_t n) {
    for (std::int32_t i = node_count(); i < n; ++i) intern(std::to_string(i));
}

void GraphBuilder::add_edge(const std::string& source, const std::string& target, std::int8_t sign) {
    const std::int32_t s = intern(source);
    const std::int32_t t = intern(target);
    edges_.push_back({s, t, sign});
}

void GraphBuilder::add_edge_indexed(std::int32_t source, std::int32_t target, std::int8_t sign) {
    ensure_nodes_indexed(std::max(source, target) + 1);
    edges_.push_back({source, target, sign});
}

Graph GraphBuilder::build() {
    const auto n = static_cast<std::int32_t>(ids_.size());
    Graph g;
    g.ids_ = std::move(ids_);
    g.id_to_index_ = std::move(id_to_index_);

    // Collapse parallel edges. Stable sort keeps occurrence order inside each
    // (source, target) group, so the group's last element carries the winning
    // sign.
    std::stable_sort(edges_.begin(), edges_.end(), [](const RawEdge& a, const RawEdge& b) {
        return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });

    struct Collapsed {
        std::int32_t source;
        std::int32_t target;
        std::int8_t sign;
        std::int32_t multiplicity;
    };
    std::vector<Collapsed> collapsed;
    collapsed.reserve(edges_.size());
    std::int64_t conflicts = 0;
    for (std::size_t i = 0; i < edges_.size();) {
        std::size_t j = i;
        std::int8_t sign = edges_[i].sign;
        while (j + 1 < edges_.size() && edges_[j + 1].source == edges_[i].source &&
               edges_[j + 1].target == edges_[i].target) {
            ++j;
            if (edges_[j].sign != sign) {
                ++conflicts;
                sign = edges_[j].sign;
            }
        }
        collapsed.push_back({edges_[i].source, edges_[i].target, sign,
                             static_cast<std::int32_t>(j - i + 1)});
        i = j + 1;
    }
    edges_.clear();
    g.sign_conflicts_ = conflicts;

    auto fill = [n](Graph::Adjacency& adj, const std::vector<Collapsed>& edges, bool by_source) {
        adj.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& e : edges) ++adj.offsets[static_cast<std::size_t>(by_source ? e.source : e.target) + 1];
        for (std::int32_t v = 0; v < n; ++v) adj.offsets[v + 1] += adj.offsets[v];
        adj.neighbors.resize(edges.size());
        adj.signs.resize(edges.size());
        adj.multiplicities.resize(edges.size());
        std::vector<std::int64_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
        for (const auto& e : edges) {
            const auto row = static_cast<std::size_t>(by_source ? e.source : e.target);
            const auto pos = static_cast<std::size_t>(cursor[row]++);
            adj.neighbors[pos] = by_source ? e.target : e.source;
            adj.signs[pos] = e.sign;
            adj.multiplicities[pos] = e.multiplicity;
        }
    };

    fill(g.out_, collapsed, true);
    // collapsed is sorted by (source, target): out rows come out sorted, but
    // in rows need their own ordering pass.
    std::sort(collapsed.begin(), collapsed.end(), [](const Collapsed& a, const Collapsed& b) {
        return std::tie(a.target, a.source) < std::tie(b.target, b.source);
    });
    fill(g.in_, collapsed, false);
    return g;
}

namespace {

bool is_comment(const std::string& line, const std::string& prefixes) {
    return !line.empty() && prefixes.find(line.front()) != std::string::npos;
}

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t end = line.find(delimiter, pos);
        if (end == std::string::npos) end = line.size();
        if (end > pos) fields.emplace_back(line.substr(pos, end - pos));
        pos = end + 1;
    }
    return fields;
}

} // namespace

Graph load_edge_list(std::istream& in, const EdgeListOptions& opts) {
    GraphBuilder builder;
    std::string line;
    std::int64_t line_number = 0;
    std::int64_t data_lines = 0;
    int skip = opts.header_lines_to_skip;

    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (skip > 0) {
            --skip;
            continue;
        }
        if (line.empty() || is_comment(line, opts.comment_prefixes)) continue;

        const auto fields = split_fields(line, opts.delimiter);
        if (fields.size() < 2) {
            throw DataError("edge list line " + std::to_string(line_number) +
                            ": expected at least 2 fields");
        }
        std::int8_t sign = 1;
        if (opts.signed_edges && fields.size() >= 3) {
            std::size_t consumed = 0;
            double w = 0.0;
            try {
                w = std::stod(fields[2], &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed != fields[2].size() || w == 0.0) {
                throw DataError("edge list line " + std::to_string(line_number) +
                                ": invalid sign field '" + fields[2] + "'");
            }
            sign = w < 0 ? -1 : 1;
        }
        builder.add_edge(fields[0], fields[1], sign);
        ++data_lines;
    }

    if (data_lines == 0) throw DataError("empty graph");
    return builder.build();
}

} // namespace tranet
