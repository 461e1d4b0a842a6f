#include "tranet/transform.hpp"

#include <cmath>

#include "tranet/errors.hpp"
#include "tranet/kernels.hpp"

namespace tranet {

std::vector<double> normalized_pagerank(std::span<const double> pr, double damping) {
    if (damping <= 0.0 || damping >= 1.0)
        throw ConfigError("normalized pagerank: damping must be in (0,1)");
    const auto n = pr.size();
    const double total = kernels::reduce_sum(pr.data(), n);
    if (std::fabs(total - 1.0) > 1e-6)
        throw DataError("normalized pagerank: input does not sum to 1");
    std::vector<double> out(n);
    const double scale = static_cast<double>(n) / (1.0 - damping);
    kernels::axpb(pr.data(), scale, 0.0, out.data(), n);
    return out;
}

nlohmann::json FitReport::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& c : columns) {
        nlohmann::json entry;
        entry["fallback"] = c.fallback;
        if (c.fallback) {
            entry["note"] = c.note;
        } else {
            entry["alpha"] = c.fit.alpha;
            entry["x_min"] = c.fit.x_min;
            entry["n_tail"] = c.fit.n_tail;
            entry["method"] =
                c.fit.method == XminPolicy::fixed_xmin_mle ? "fixed_xmin_mle" : "ks_scan_mle";
        }
        j[c.column] = entry;
    }
    return j;
}

std::pair<FeatureMatrix, FitReport> transform_features(const FeatureMatrix& f,
                                                       const TransformPolicy& policy) {
    static const std::vector<FeatureKind> kCanonical = {
        FeatureKind::degree, FeatureKind::indegree, FeatureKind::outdegree,
        FeatureKind::clustering, FeatureKind::pagerank};
    if (f.cols() != 5) throw DataError("transform: expected the 5 canonical base columns");
    for (std::size_t c = 0; c < 5; ++c) {
        if (f.schema[c].kind != kCanonical[c] || f.schema[c].transform != TransformTag::raw ||
            f.schema[c].aggregation_round != 0) {
            throw DataError("transform: column '" + f.schema[c].name() +
                            "' is not a canonical raw base column");
        }
    }

    FeatureMatrix out;
    out.node_ids = f.node_ids;
    out.schema = f.schema;
    out.columns = f.columns;
    FitReport report;

    // Degree-like columns: independent per-column fits over values >= 1.
    for (std::size_t c = 0; c < 3; ++c) {
        const auto& values = f.columns[c];
        std::vector<double> tail;
        tail.reserve(values.size());
        for (double v : values) {
            if (v >= 1.0) tail.push_back(v);
        }
        ColumnFitReport col;
        col.column = f.schema[c].name();
        try {
            col.fit = fit_power_law(tail, policy.xmin_policy);
            out.columns[c] = power_law_transform(values, col.fit);
            out.schema[c].transform = TransformTag::power_law;
        } catch (const NumericError& e) {
            col.fallback = true;
            col.note = e.what();
            out.schema[c].transform = TransformTag::identity;
        } catch (const DataError& e) {
            col.fallback = true;
            col.note = e.what();
            out.schema[c].transform = TransformTag::identity;
        }
        report.columns.push_back(std::move(col));
    }

    // Clustering: identity by policy.
    out.schema[3].transform = TransformTag::identity;

    // PageRank: lower-bound normalization.
    out.columns[4] = normalized_pagerank(f.columns[4], policy.damping);
    out.schema[4].transform = TransformTag::normalized_pagerank;

    return {std::move(out), std::move(report)};
}

} // namespace tranet
