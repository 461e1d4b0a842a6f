#include "tranet/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tranet/errors.hpp"
#include "tranet/rng.hpp"

namespace tranet {

std::pair<Graph, std::vector<std::int32_t>> generate_planted_network(const SyntheticConfig& cfg) {
    if (cfg.n_nodes <= 0) throw ConfigError("synthetic: n_nodes must be positive");
    if (cfg.attachment_edges_per_node <= 0)
        throw ConfigError("synthetic: attachment_edges_per_node must be positive");
    if (cfg.attachment_edges_per_node >= cfg.n_nodes)
        throw ConfigError("synthetic: attachment_edges_per_node must be < n_nodes");
    if (cfg.hub_fraction <= 0.0 || cfg.hub_fraction >= 1.0)
        throw ConfigError("synthetic: hub_fraction must be in (0,1)");
    if (cfg.noise_rate < 0.0 || cfg.noise_rate >= 1.0)
        throw ConfigError("synthetic: noise_rate must be in [0,1)");

    const std::int32_t n = cfg.n_nodes;
    const std::int32_t m = cfg.attachment_edges_per_node;
    SplitMix64 rng(SplitMix64::derive(cfg.seed));

    GraphBuilder builder;
    builder.ensure_nodes_indexed(n);

    // Attachment pool: node v appears indegree(v) + 1 times, so a uniform
    // draw from the pool is a draw proportional to indegree + 1. The pool is
    // updated after every placed edge.
    std::vector<std::int32_t> pool;
    pool.reserve(static_cast<std::size_t>(n) * (1 + static_cast<std::size_t>(m)));
    pool.push_back(0);
    for (std::int32_t v = 1; v < n; ++v) {
        const std::int32_t picks = std::min(m, v);
        for (std::int32_t e = 0; e < picks; ++e) {
            const auto target = pool[rng.next_below(pool.size())];
            builder.add_edge_indexed(v, target);
            pool.push_back(target);
        }
        pool.push_back(v);
    }

    Graph graph = builder.build();

    // Total degree = distinct in-neighbors + distinct out-neighbors,
    // matching the degree feature definition.
    std::vector<std::int64_t> degree(static_cast<std::size_t>(n), 0);
    for (std::int32_t v = 0; v < n; ++v) {
        degree[v] = static_cast<std::int64_t>(graph.out_neighbors(v).size()) +
                    static_cast<std::int64_t>(graph.in_neighbors(v).size());
    }

    std::vector<std::int32_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&degree](std::int32_t a, std::int32_t b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return a < b;
    });

    const auto hubs = static_cast<std::int64_t>(std::ceil(cfg.hub_fraction * n));
    std::vector<std::int32_t> labels(static_cast<std::size_t>(n), 1);
    for (std::int64_t i = 0; i < hubs && i < n; ++i) labels[order[static_cast<std::size_t>(i)]] = 2;

    // Flip floor(noise_rate * n) labels at uniformly chosen distinct nodes
    // (partial Fisher-Yates).
    const auto flips = static_cast<std::int64_t>(std::floor(cfg.noise_rate * n));
    std::vector<std::int32_t> indices(static_cast<std::size_t>(n));
    std::iota(indices.begin(), indices.end(), 0);
    for (std::int64_t i = 0; i < flips; ++i) {
        const auto j = i + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(n - i)));
        std::swap(indices[static_cast<std::size_t>(i)], indices[static_cast<std::size_t>(j)]);
        auto& label = labels[static_cast<std::size_t>(indices[static_cast<std::size_t>(i)])];
        label = label == 1 ? 2 : 1;
    }

    return {std::move(graph), std::move(labels)};
}

} // namespace tranet
