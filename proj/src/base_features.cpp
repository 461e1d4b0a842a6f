#include "tranet/base_features.hpp"

#include <algorithm>
#include <string>

#include "tranet/errors.hpp"
#include "tranet/kernels.hpp"

namespace tranet {

std::array<std::vector<double>, 3> degree_features(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.node_count());
    std::array<std::vector<double>, 3> cols;
    for (auto& c : cols) c.assign(n, 0.0);
    for (std::int32_t v = 0; v < g.node_count(); ++v) {
        const auto in = static_cast<double>(g.in_neighbors(v).size());
        const auto out = static_cast<double>(g.out_neighbors(v).size());
        cols[0][v] = in + out;
        cols[1][v] = in;
        cols[2][v] = out;
    }
    return cols;
}

std::vector<double> local_clustering(const Graph& g) {
    const Graph u = g.undirected_view();
    const auto n = static_cast<std::size_t>(u.node_count());
    std::vector<double> c(n, 0.0);
    for (std::int32_t v = 0; v < u.node_count(); ++v) {
        const auto nbrs = u.out_neighbors(v);
        const auto k = static_cast<std::int64_t>(nbrs.size());
        if (k < 2) continue;
        // Each triangle through v is counted twice in the sum of pairwise
        // intersections, so wedges = sum / (k*(k-1)) gives c directly.
        std::int64_t closed = 0;
        for (std::int32_t w : nbrs) {
            const auto wn = u.out_neighbors(w);
            std::size_t i = 0, j = 0;
            while (i < nbrs.size() && j < wn.size()) {
                if (nbrs[i] == wn[j]) {
                    ++closed;
                    ++i;
                    ++j;
                } else if (nbrs[i] < wn[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
        }
        c[v] = static_cast<double>(closed) / (static_cast<double>(k) * static_cast<double>(k - 1));
    }
    return c;
}

std::vector<double> pagerank(const Graph& g, const PageRankConfig& cfg) {
    if (cfg.damping <= 0.0 || cfg.damping >= 1.0)
        throw ConfigError("pagerank: damping must be in (0,1)");
    if (cfg.tolerance <= 0.0) throw ConfigError("pagerank: tolerance must be positive");
    const auto n = static_cast<std::size_t>(g.node_count());
    if (n == 0) throw DataError("pagerank: empty graph");

    const double d = cfg.damping;
    const double uniform = 1.0 / static_cast<double>(n);
    const double base = (1.0 - d) * uniform;

    // Out-degree reciprocal per node; dangling nodes collected separately.
    std::vector<double> inv_outdeg(n, 0.0);
    std::vector<std::int32_t> dangling;
    for (std::int32_t v = 0; v < g.node_count(); ++v) {
        const auto deg = g.out_neighbors(v).size();
        if (deg == 0) {
            dangling.push_back(v);
        } else {
            inv_outdeg[v] = 1.0 / static_cast<double>(deg);
        }
    }

    const auto& in = g.in_adjacency();
    std::vector<double> rank(n, uniform);
    std::vector<double> contrib(n, 0.0);
    std::vector<double> next(n, 0.0);

    double residual = 0.0;
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        kernels::hadamard(rank.data(), inv_outdeg.data(), contrib.data(), n);
        const double dangling_mass =
            kernels::gather_sum(rank.data(), dangling.data(), dangling.size());
        const double shift = base + d * dangling_mass * uniform;
        for (std::size_t v = 0; v < n; ++v) {
            const auto b = static_cast<std::size_t>(in.offsets[v]);
            const auto e = static_cast<std::size_t>(in.offsets[v + 1]);
            next[v] = kernels::gather_sum(contrib.data(), in.neighbors.data() + b, e - b);
        }
        kernels::axpb(next.data(), d, shift, next.data(), n);
        residual = kernels::l1_distance(next.data(), rank.data(), n);
        rank.swap(next);
        if (residual < cfg.tolerance) return rank;
    }
    throw NumericError("pagerank: no convergence after " + std::to_string(cfg.max_iterations) +
                       " iterations (residual " + std::to_string(residual) + ")");
}

FeatureMatrix extract_base_features(const Graph& g, const PageRankConfig& cfg) {
    FeatureMatrix f;
    f.node_ids = g.node_ids();
    auto degrees = degree_features(g);
    f.columns.push_back(std::move(degrees[0]));
    f.columns.push_back(std::move(degrees[1]));
    f.columns.push_back(std::move(degrees[2]));
    f.columns.push_back(local_clustering(g));
    f.columns.push_back(pagerank(g, cfg));
    f.schema = {
        {FeatureKind::degree, TransformTag::raw, 0},
        {FeatureKind::indegree, TransformTag::raw, 0},
        {FeatureKind::outdegree, TransformTag::raw, 0},
        {FeatureKind::clustering, TransformTag::raw, 0},
        {FeatureKind::pagerank, TransformTag::raw, 0},
    };
    return f;
}

} // namespace tranet
