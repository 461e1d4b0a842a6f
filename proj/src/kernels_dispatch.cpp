#include "tranet/kernels.hpp"

#include <cstdlib>
#include <string>

#include "tranet/errors.hpp"

namespace tranet::kernels {

namespace {

struct Vtable {
    double (*reduce_sum)(const double*, std::size_t);
    double (*l1_distance)(const double*, const double*, std::size_t);
    void (*axpb)(const double*, double, double, double*, std::size_t);
    void (*hadamard)(const double*, const double*, double*, std::size_t);
    double (*gather_sum)(const double*, const std::int32_t*, std::size_t);
    const char* name;
};

constexpr Vtable kScalar{scalar::reduce_sum, scalar::l1_distance, scalar::axpb,
                         scalar::hadamard, scalar::gather_sum, "scalar"};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable kAvx2{avx2::reduce_sum, avx2::l1_distance, avx2::axpb,
                       avx2::hadamard, avx2::gather_sum, "avx2"};
#endif

bool detect_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Vtable* initial_backend() {
    const char* env = std::getenv("TRANET_KERNELS");
    if (env != nullptr && std::string(env) == "scalar") return &kScalar;
#if defined(__x86_64__) || defined(_M_X64)
    if (detect_avx2()) return &kAvx2;
#endif
    return &kScalar;
}

const Vtable* g_active = initial_backend();

} // namespace

bool avx2_available() { return detect_avx2(); }

std::string_view active_backend() { return g_active->name; }

void use_backend(std::string_view name) {
    if (name == "scalar") {
        g_active = &kScalar;
        return;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2") {
        if (!detect_avx2()) throw ConfigError("kernels: avx2 not supported on this CPU");
        g_active = &kAvx2;
        return;
    }
#endif
    throw ConfigError("kernels: unknown backend '" + std::string(name) + "'");
}

double reduce_sum(const double* x, std::size_t n) { return g_active->reduce_sum(x, n); }

double l1_distance(const double* a, const double* b, std::size_t n) {
    return g_active->l1_distance(a, b, n);
}

void axpb(const double* x, double a, double b, double* out, std::size_t n) {
    g_active->axpb(x, a, b, out, n);
}

void hadamard(const double* a, const double* b, double* out, std::size_t n) {
    g_active->hadamard(a, b, out, n);
}

double gather_sum(const double* values, const std::int32_t* idx, std::size_t n) {
    return g_active->gather_sum(values, idx, n);
}

} // namespace tranet::kernels
