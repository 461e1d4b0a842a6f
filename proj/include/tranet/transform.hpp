#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "tranet/feature_matrix.hpp"
#include "tranet/power_law.hpp"

namespace tranet {

// Per-kind transformation policy: degree-like columns get the power-law
// quantile transform, the PageRank column gets the lower-bound normalization,
// clustering passes through unchanged. The transformation uses only the one
// network it is applied to.
struct TransformPolicy {
    XminPolicy xmin_policy = XminPolicy::fixed_xmin_mle;
    double damping = 0.85;  // must match the PageRank extraction damping
};

// npr(v) = pr(v) * n / (1 - d); every output >= 1 within rounding because
// pr(v) >= (1-d)/n.
std::vector<double> normalized_pagerank(std::span<const double> pr, double damping);

struct ColumnFitReport {
    std::string column;
    bool fallback = false;  // degenerate fit, column passed through unchanged
    PowerLawFit fit;        // valid when !fallback
    std::string note;
};

struct FitReport {
    std::vector<ColumnFitReport> columns;
    nlohmann::json to_json() const;
};

// Applies the policy to the 5 canonical raw base columns. A degenerate
// power-law fit never aborts: the column passes through unchanged and the
// report marks the fallback.
std::pair<FeatureMatrix, FitReport> transform_features(const FeatureMatrix& f,
                                                       const TransformPolicy& policy = {});

} // namespace tranet
