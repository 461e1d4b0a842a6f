#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace tranet {

enum class Direction { out, in, all };

// Options for KONECT/SNAP-style edge-list ingestion: one edge per line,
// `source target [sign]`, comment lines starting with one of the comment
// prefixes.
struct EdgeListOptions {
    char delimiter = '\t';
    std::string comment_prefixes = "%#";
    bool signed_edges = false;
    int header_lines_to_skip = 0;
};

// Immutable directed graph, optionally signed. Parallel (u,v) edges are
// collapsed into one adjacency entry with a multiplicity counter; a repeated
// edge with a conflicting sign overwrites the sign (last occurrence wins) and
// bumps sign_conflicts(). External node identifiers are opaque strings mapped
// to dense indices 0..n-1 in order of first appearance.
class Graph {
public:
    struct Adjacency {
        std::vector<std::int64_t> offsets;     // size n+1
        std::vector<std::int32_t> neighbors;   // sorted within each row
        std::vector<std::int8_t> signs;        // +1 / -1
        std::vector<std::int32_t> multiplicities;
    };

    std::int32_t node_count() const { return static_cast<std::int32_t>(ids_.size()); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(out_.neighbors.size()); }
    std::int64_t sign_conflicts() const { return sign_conflicts_; }

    const std::string& node_id(std::int32_t v) const { return ids_[static_cast<std::size_t>(v)]; }
    const std::vector<std::string>& node_ids() const { return ids_; }
    // Returns -1 when the identifier is unknown.
    std::int32_t index_of(const std::string& id) const;

    const Adjacency& out_adjacency() const { return out_; }
    const Adjacency& in_adjacency() const { return in_; }

    std::span<const std::int32_t> out_neighbors(std::int32_t v) const;
    std::span<const std::int32_t> in_neighbors(std::int32_t v) const;
    std::span<const std::int8_t> out_signs(std::int32_t v) const;

    // Sorted neighbor indices; direction `all` is the deduplicated union of
    // in- and out-neighbors with v itself excluded (self-loops never count as
    // neighbors).
    std::vector<std::int32_t> neighbors(std::int32_t v, Direction dir) const;

    bool has_self_loop(std::int32_t v) const;

    // Symmetric unsigned simple projection: {u,v} present iff (u,v) or (v,u)
    // is, self-loops dropped, signs +1, multiplicities 1. Node ids preserved.
    Graph undirected_view() const;

    // Edge-list serialization, nodes in internal-index order; multiplicities
    // expand to repeated lines. Signs are emitted only when with_signs.
    void serialize(std::ostream& os, bool with_signs, char delimiter = '\t') const;

    // Labeled-graph equality: same node-id set, same (source id, target id,
    // sign, multiplicity) edge set. Internal index order is not compared.
    bool operator==(const Graph& other) const;

private:
    friend class GraphBuilder;

    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::int32_t> id_to_index_;
    Adjacency out_;
    Adjacency in_;
    std::int64_t sign_conflicts_ = 0;
};

// Accumulates edges (by external id or pre-assigned dense index) and builds
// the immutable Graph. Index assignment is by first appearance; adding an
// edge registers its source id before its target id.
class GraphBuilder {
public:
    void add_edge(const std::string& source, const std::string& target, std::int8_t sign = 1);
    // Index-based variant for generators that already work in dense indices;
    // ids become the decimal representation of the index.
    void add_edge_indexed(std::int32_t source, std::int32_t target, std::int8_t sign = 1);
    void ensure_node(const std::string& id);
    void ensure_nodes_indexed(std::int32_t n);

    std::int32_t node_count() const { return static_cast<std::int32_t>(ids_.size()); }

    Graph build();

private:
    std::int32_t intern(const std::string& id);

    struct RawEdge {
        std::int32_t source;
        std::int32_t target;
        std::int8_t sign;
    };

    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::int32_t> id_to_index_;
    std::vector<RawEdge> edges_;
};

// Parses an edge-list stream. Throws DataError with the offending line number
// on malformed input and on empty input ("empty graph").
Graph load_edge_list(std::istream& in, const EdgeListOptions& opts = {});

} // namespace tranet
