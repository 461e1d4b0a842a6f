#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Dense vector kernels behind the power-iteration, transform and aggregation
// inner loops. Scalar reference implementations always exist; an AVX2 variant
// is selected at runtime when the CPU supports it. The environment variable
// TRANET_KERNELS=scalar|avx2 overrides the automatic choice.

namespace tranet::kernels {

namespace scalar {
double reduce_sum(const double* x, std::size_t n);
double l1_distance(const double* a, const double* b, std::size_t n);
// out[i] = a * x[i] + b
void axpb(const double* x, double a, double b, double* out, std::size_t n);
// out[i] = a[i] * b[i]
void hadamard(const double* a, const double* b, double* out, std::size_t n);
// sum of values[idx[i]]
double gather_sum(const double* values, const std::int32_t* idx, std::size_t n);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double reduce_sum(const double* x, std::size_t n);
double l1_distance(const double* a, const double* b, std::size_t n);
void axpb(const double* x, double a, double b, double* out, std::size_t n);
void hadamard(const double* a, const double* b, double* out, std::size_t n);
double gather_sum(const double* values, const std::int32_t* idx, std::size_t n);
} // namespace avx2
#endif

bool avx2_available();

// Name of the backend the dispatched entry points currently use.
std::string_view active_backend();

// Force a backend ("scalar" or "avx2"). Throws ConfigError if the requested
// backend is not usable on this machine. Intended for tests and debugging.
void use_backend(std::string_view name);

// Dispatched entry points.
double reduce_sum(const double* x, std::size_t n);
double l1_distance(const double* a, const double* b, std::size_t n);
void axpb(const double* x, double a, double b, double* out, std::size_t n);
void hadamard(const double* a, const double* b, double* out, std::size_t n);
double gather_sum(const double* values, const std::int32_t* idx, std::size_t n);

} // namespace tranet::kernels
