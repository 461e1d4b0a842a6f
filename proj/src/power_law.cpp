#include "tranet/power_law.hpp"

#include <algorithm>
#include <cmath>

#include "tranet/errors.hpp"

namespace tranet {

namespace {

// MLE over the tail samples >= x_min of an ascending-sorted sample range.
PowerLawFit mle_for_xmin(std::span<const double> sorted, double x_min) {
    const auto first = std::lower_bound(sorted.begin(), sorted.end(), x_min);
    const auto n_tail = static_cast<std::int64_t>(sorted.end() - first);
    if (n_tail < 2) throw DataError("power-law fit: fewer than 2 samples >= x_min");
    double log_sum = 0.0;
    for (auto it = first; it != sorted.end(); ++it) log_sum += std::log(*it / x_min);
    if (log_sum <= 0.0)
        throw DegenerateFitError("power-law fit: all tail samples equal x_min");
    PowerLawFit fit;
    fit.alpha = 1.0 + static_cast<double>(n_tail) / log_sum;
    fit.x_min = x_min;
    fit.n_tail = n_tail;
    return fit;
}

// KS distance between the empirical tail CDF and the fitted CDF
// F(x) = 1 - (x/x_min)^-(alpha-1).
double ks_distance(std::span<const double> sorted, const PowerLawFit& fit) {
    const auto first = std::lower_bound(sorted.begin(), sorted.end(), fit.x_min);
    const auto n = static_cast<double>(sorted.end() - first);
    double worst = 0.0;
    std::int64_t i = 0;
    for (auto it = first; it != sorted.end(); ++it, ++i) {
        const double model = 1.0 - std::pow(*it / fit.x_min, -(fit.alpha - 1.0));
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        worst = std::max(worst, std::max(std::fabs(model - lo), std::fabs(model - hi)));
    }
    return worst;
}

} // namespace

PowerLawFit fit_power_law(std::span<const double> samples, XminPolicy policy, double fixed_x_min) {
    for (double x : samples) {
        if (!std::isfinite(x)) throw DataError("power-law fit: non-finite sample");
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());

    if (policy == XminPolicy::fixed_xmin_mle) {
        if (fixed_x_min < 1.0) throw ConfigError("power-law fit: x_min must be >= 1");
        return mle_for_xmin(sorted, fixed_x_min);
    }

    // Clauset-style scan over distinct sample values. Candidates that leave a
    // degenerate or too-small tail are skipped; ties in KS distance resolve
    // to the smallest x_min because candidates ascend.
    PowerLawFit best;
    double best_ks = 0.0;
    bool have_best = false;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i] == sorted[i - 1]) continue;
        const double candidate = sorted[i];
        if (candidate < 1.0) continue;
        PowerLawFit fit;
        try {
            fit = mle_for_xmin(sorted, candidate);
        } catch (const NumericError&) {
            continue;
        } catch (const DataError&) {
            break;  // tails only shrink from here
        }
        const double ks = ks_distance(sorted, fit);
        if (!have_best || ks < best_ks) {
            best = fit;
            best_ks = ks;
            have_best = true;
        }
    }
    if (!have_best)
        throw DegenerateFitError("power-law fit: no x_min candidate admits a finite exponent");
    best.method = XminPolicy::ks_scan_mle;
    return best;
}

std::vector<double> power_law_transform(std::span<const double> values, const PowerLawFit& fit) {
    if (!(fit.alpha > 1.0) || !(fit.x_min >= 1.0))
        throw ConfigError("power-law transform: invalid fit");
    std::vector<double> out(values.size());
    const double exponent = fit.alpha - 1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = values[i];
        if (x < 0.0) throw DataError("power-law transform: negative input");
        if (x == 0.0) {
            out[i] = 0.0;
        } else if (x < fit.x_min) {
            out[i] = 1.0;
        } else {
            out[i] = std::pow(x / fit.x_min, exponent);
        }
    }
    return out;
}

} // namespace tranet
