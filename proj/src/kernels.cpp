#include "oqho/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace oqho::kern {

namespace detail {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

#if defined(OQHO_HAVE_AVX2)
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
bool cpu_has_avx2();
#endif

using DotFn = double (*)(const double*, const double*, std::size_t);
using AxpyFn = void (*)(double, const double*, double*, std::size_t);

struct Table {
    DotFn dot;
    AxpyFn axpy;
    Isa isa;
};

constexpr Table scalar_table{&dot_scalar, &axpy_scalar, Isa::scalar};

#if defined(OQHO_HAVE_AVX2)
constexpr Table avx2_table{&dot_avx2, &axpy_avx2, Isa::avx2};
#endif

const Table* detect() {
#if defined(OQHO_HAVE_AVX2)
    if (cpu_has_avx2()) return &avx2_table;
#endif
    return &scalar_table;
}

std::atomic<const Table*> active{nullptr};

const Table* table() {
    const Table* t = active.load(std::memory_order_acquire);
    if (!t) {
        t = detect();
        active.store(t, std::memory_order_release);
    }
    return t;
}

}  // namespace detail

Isa active_isa() { return detail::table()->isa; }

bool avx2_available() {
#if defined(OQHO_HAVE_AVX2)
    return detail::cpu_has_avx2();
#else
    return false;
#endif
}

void force_isa(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            detail::active.store(&detail::scalar_table, std::memory_order_release);
            return;
        case Isa::avx2:
#if defined(OQHO_HAVE_AVX2)
            if (detail::cpu_has_avx2()) {
                detail::active.store(&detail::avx2_table, std::memory_order_release);
                return;
            }
#endif
            throw std::runtime_error("avx2 kernels unavailable on this host");
    }
    throw std::runtime_error("unknown isa");
}

void reset_isa() { detail::active.store(detail::detect(), std::memory_order_release); }

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

double dot(const double* x, const double* y, std::size_t n) { return detail::table()->dot(x, y, n); }

void axpy(double a, const double* x, double* y, std::size_t n) { detail::table()->axpy(a, x, y, n); }

}  // namespace oqho::kern
