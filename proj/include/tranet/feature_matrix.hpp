#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tranet {

enum class FeatureKind { degree, indegree, outdegree, clustering, pagerank, latent };

enum class TransformTag { raw, power_law, normalized_pagerank, identity };

// Column descriptor. The serialized column name is `<kind>.<tag>.r<round>`,
// e.g. "degree.raw.r0" or "pagerank.npr.r3"; latent SVD columns are named
// "svd<j>".
struct ColumnSchema {
    FeatureKind kind = FeatureKind::degree;
    TransformTag transform = TransformTag::raw;
    int aggregation_round = 0;
    int latent_index = -1;  // only for FeatureKind::latent

    std::string name() const;
    static ColumnSchema parse(const std::string& name);

    bool operator==(const ColumnSchema&) const = default;
};

// Column-major table of per-node features. Rows align with the graph's
// internal node indices; node_ids keeps the external identifiers for I/O.
// All values must stay finite and non-negative feature semantics are the
// producers' responsibility.
struct FeatureMatrix {
    std::vector<std::string> node_ids;
    std::vector<ColumnSchema> schema;
    std::vector<std::vector<double>> columns;

    std::size_t rows() const { return node_ids.size(); }
    std::size_t cols() const { return columns.size(); }

    // Checks schema/column consistency and rejects NaN or infinite entries.
    void validate() const;

    std::vector<std::string> column_names() const;
    std::int64_t column_index(const std::string& name) const;  // -1 if absent

    // CSV with header `node_id,<col>,...`; floats with 17 significant digits.
    void write_csv(std::ostream& os) const;
    static FeatureMatrix read_csv(std::istream& is);
};

std::string to_string(FeatureKind kind);
std::string to_string(TransformTag tag);

} // namespace tranet
