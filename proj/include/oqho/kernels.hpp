#pragma once

#include <cstddef>
#include <string_view>

// Dense arithmetic primitives behind the matrix layer. A scalar reference
// implementation is always available; an AVX2+FMA variant is compiled on
// x86-64 and selected at runtime when the CPU supports it. The two variants
// agree up to reduction-order rounding and are equivalence-tested.
namespace oqho::kern {

enum class Isa { scalar, avx2 };

// Instruction set the dispatcher resolved to (after CPU detection or force_isa).
Isa active_isa();

// True when the AVX2 variant is compiled in and the CPU supports it.
bool avx2_available();

// Pin the kernel set; throws std::runtime_error if the requested set is
// unavailable. Intended for equivalence tests.
void force_isa(Isa isa);

// Return to automatic CPU-based selection.
void reset_isa();

std::string_view isa_name(Isa isa);

// sum_i x[i]*y[i]
double dot(const double* x, const double* y, std::size_t n);

// y[i] += a*x[i]
void axpy(double a, const double* x, double* y, std::size_t n);

}  // namespace oqho::kern
