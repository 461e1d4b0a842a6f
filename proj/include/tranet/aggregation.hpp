#pragma once

#include <span>
#include <vector>

#include "tranet/feature_matrix.hpp"
#include "tranet/graph.hpp"

namespace tranet {

struct AggregationConfig {
    int r_max = 5;
    Direction direction = Direction::all;
};

// One aggregation round: out(v) = mean of each input column over
// neighbors(g, v, direction); nodes without neighbors get 0.
std::vector<std::vector<double>> aggregate_once(const Graph& g,
                                                std::span<const std::vector<double>> cols,
                                                Direction direction = Direction::all);

// Appends r_max rounds of neighbor means: round r aggregates round r-1's
// five columns, giving 5*(r_max+1) columns in canonical order.
FeatureMatrix recursive_aggregate(const Graph& g, const FeatureMatrix& f,
                                  const AggregationConfig& cfg = {});

} // namespace tranet
