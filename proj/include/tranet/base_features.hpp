#pragma once

#include <array>
#include <vector>

#include "tranet/feature_matrix.hpp"
#include "tranet/graph.hpp"

namespace tranet {

struct PageRankConfig {
    double damping = 0.85;
    double tolerance = 1e-10;  // L1 change per iteration
    int max_iterations = 200;
};

// Distinct-neighbor degree counts; a self-loop contributes 1 to indegree and
// 1 to outdegree. Order: degree, indegree, outdegree.
std::array<std::vector<double>, 3> degree_features(const Graph& g);

// Local clustering coefficient on the undirected simple projection;
// c = 2 T(v) / (k (k-1)), 0 when k < 2.
std::vector<double> local_clustering(const Graph& g);

// Standard PageRank with uniform teleportation and uniform redistribution of
// dangling mass. Throws NumericError when the L1 residual has not dropped
// below tolerance after max_iterations.
std::vector<double> pagerank(const Graph& g, const PageRankConfig& cfg = {});

// The five base columns (degree, indegree, outdegree, clustering, pagerank)
// in canonical order, transform tag raw, aggregation round 0.
FeatureMatrix extract_base_features(const Graph& g, const PageRankConfig& cfg = {});

} // namespace tranet
