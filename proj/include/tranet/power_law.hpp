#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tranet {

enum class XminPolicy { fixed_xmin_mle, ks_scan_mle };

// Continuous power-law fit p(x) = c x^-alpha for x >= x_min. The
// normalization constant is implied: c = (alpha-1) * x_min^(alpha-1).
struct PowerLawFit {
    double alpha = 0.0;
    double x_min = 1.0;
    std::int64_t n_tail = 0;
    XminPolicy method = XminPolicy::fixed_xmin_mle;
};

// Continuous MLE: alpha = 1 + n_tail / sum(ln(x_i / x_min)) over samples
// >= x_min. With ks_scan_mle, every distinct sample value is tried as x_min
// and the fit with the smallest Kolmogorov-Smirnov distance wins (ties go to
// the smallest x_min). Throws DegenerateFitError when all tail samples equal
// x_min and DataError when fewer than 2 tail samples exist.
PowerLawFit fit_power_law(std::span<const double> samples,
                          XminPolicy policy = XminPolicy::fixed_xmin_mle,
                          double fixed_x_min = 1.0);

// Quantile map onto the canonical tail p'(x') = x'^-2:
//   x = 0        -> 0
//   0 < x < xmin -> 1 (lower transform boundary)
//   x >= xmin    -> (x / xmin)^(alpha-1)
// Monotone non-decreasing; negative inputs are a domain error.
std::vector<double> power_law_transform(std::span<const double> values, const PowerLawFit& fit);

} // namespace tranet
