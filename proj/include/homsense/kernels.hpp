#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace homsense::kernels {

// The likelihood grid scan evaluates sum_i log(1 + s_i cos(dk_i dx)) millions
// of times; it is the one data-parallel hot loop in the project. A scalar
// reference implementation always exists; an AVX2+FMA variant is selected at
// runtime when the CPU has it. Terms are clamped at 1e-300 before the log so
// a zero-probability event yields a huge negative penalty instead of -inf.

/// Reference implementation (sequential accumulation, libm cos/log).
double beat_loglik_sum_scalar(const double* dk, const double* s, std::size_t n, double dx);

#if defined(HOMSENSE_HAVE_AVX2)
/// AVX2+FMA variant; call only when cpu_has_avx2() is true.
double beat_loglik_sum_avx2(const double* dk, const double* s, std::size_t n, double dx);
#endif

bool cpu_has_avx2();

enum class Isa { Scalar, Avx2 };

/// Runtime-dispatched entry point used by the estimator.
double beat_loglik_sum(const double* dk, const double* s, std::size_t n, double dx);

/// Force a specific implementation (tests, --kernel flag); nullopt = auto.
/// Throws invalid_parameter when the requested ISA is unavailable.
void set_kernel_isa(std::optional<Isa> isa);
Isa active_kernel_isa();
std::string kernel_isa_name(Isa isa);

}  // namespace homsense::kernels
