#include "tranet/aggregation.hpp"

#include <cstdint>

#include "tranet/errors.hpp"
#include "tranet/kernels.hpp"

namespace tranet {

namespace {

// Neighborhood index lists in CSR form for the requested direction; the
// `all` direction excludes self-loops and deduplicates in/out.
struct NeighborCsr {
    std::vector<std::int64_t> offsets;
    std::vector<std::int32_t> neighbors;
};

NeighborCsr build_neighbor_csr(const Graph& g, Direction dir) {
    NeighborCsr csr;
    const auto n = g.node_count();
    csr.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<std::int32_t>> rows(static_cast<std::size_t>(n));
    for (std::int32_t v = 0; v < n; ++v) rows[v] = g.neighbors(v, dir);
    for (std::int32_t v = 0; v < n; ++v)
        csr.offsets[v + 1] = csr.offsets[v] + static_cast<std::int64_t>(rows[v].size());
    csr.neighbors.reserve(static_cast<std::size_t>(csr.offsets.back()));
    for (auto& row : rows) csr.neighbors.insert(csr.neighbors.end(), row.begin(), row.end());
    return csr;
}

std::vector<std::vector<double>> aggregate_with_csr(const NeighborCsr& csr,
                                                    std::span<const std::vector<double>> cols) {
    const auto n = csr.offsets.size() - 1;
    std::vector<std::vector<double>> out(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != n) throw DataError("aggregate: column length != node count");
        out[c].assign(n, 0.0);
        const double* values = cols[c].data();
        for (std::size_t v = 0; v < n; ++v) {
            const auto b = static_cast<std::size_t>(csr.offsets[v]);
            const auto e = static_cast<std::size_t>(csr.offsets[v + 1]);
            if (e == b) continue;
            out[c][v] = kernels::gather_sum(values, csr.neighbors.data() + b, e - b) /
                        static_cast<double>(e - b);
        }
    }
    return out;
}

} // namespace

std::vector<std::vector<double>> aggregate_once(const Graph& g,
                                                std::span<const std::vector<double>> cols,
                                                Direction direction) {
    return aggregate_with_csr(build_neighbor_csr(g, direction), cols);
}

FeatureMatrix recursive_aggregate(const Graph& g, const FeatureMatrix& f,
                                  const AggregationConfig& cfg) {
    if (cfg.r_max < 0) throw ConfigError("aggregation: r_max must be >= 0");
    if (f.cols() != 5) throw DataError("aggregation: expected the 5 canonical base columns");
    for (const auto& s : f.schema) {
        if (s.aggregation_round != 0)
            throw DataError("aggregation: input columns must be round 0");
    }
    if (f.rows() != static_cast<std::size_t>(g.node_count()))
        throw DataError("aggregation: feature rows != node count");

    FeatureMatrix out = f;
    if (cfg.r_max == 0) return out;

    const NeighborCsr csr = build_neighbor_csr(g, cfg.direction);
    std::span<const std::vector<double>> previous(out.columns.data(), 5);
    std::size_t round_start = 0;
    for (int r = 1; r <= cfg.r_max; ++r) {
        auto aggregated = aggregate_with_csr(csr, previous);
        for (std::size_t c = 0; c < 5; ++c) {
            ColumnSchema schema = out.schema[round_start + c];
            schema.aggregation_round = r;
            out.schema.push_back(schema);
            out.columns.push_back(std::move(aggregated[c]));
        }
        round_start += 5;
        previous = std::span<const std::vector<double>>(out.columns.data() + round_start, 5);
    }
    return out;
}

} // namespace tranet
