#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tranet/graph.hpp"

namespace tranet {

// Preferential-attachment generator with planted degree-based roles: the
// ceil(hub_fraction * n) highest-total-degree nodes get label 2, the rest
// label 1, then a noise_rate fraction of labels is flipped.
struct SyntheticConfig {
    std::int32_t n_nodes = 1000;
    std::int32_t attachment_edges_per_node = 3;
    double hub_fraction = 0.1;  // in (0,1)
    double noise_rate = 0.0;    // in [0,1)
    std::uint64_t seed = 0;
};

// Returns the graph and the label vector aligned to internal node indices
// (node ids are the decimal indices "0".."n-1"). Bit-deterministic given the
// seed.
std::pair<Graph, std::vector<std::int32_t>> generate_planted_network(const SyntheticConfig& cfg);

} // namespace tranet
