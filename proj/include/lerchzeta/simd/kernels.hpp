#pragma once

// Data-parallel inner loops with a scalar reference implementation and an
// AVX2+FMA implementation picked at runtime. Every entry point below routes
// through the active table; tests reach both tables directly through
// `table(Isa)` and check them against each other.

#include <cstddef>
#include <span>

namespace lerchzeta::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  const char* name;
  void (*exp)(const double* x, double* out, std::size_t n);
  void (*expm1)(const double* x, double* out, std::size_t n);
  void (*log)(const double* x, double* out, std::size_t n);   // x > 0
  void (*pow)(const double* x, double exponent, double* out, std::size_t n);  // x > 0
  // e^(-a x) / (1 - e^(-x)) - 1/x for x > 0 (no small-x branch)
  void (*h_direct)(double a, const double* x, double* out, std::size_t n);
  // sum_{n=0}^{count-1} (n + shift)^(-exponent), compensated summation
  double (*power_sum)(double shift, std::size_t count, double exponent);
};

/// True when the running CPU (and this build) can execute the variant.
bool isa_supported(Isa isa);

/// Variant table; throws std::invalid_argument when unsupported.
const KernelTable& table(Isa isa);

/// Table chosen on first use: AVX2 when supported, unless the environment
/// variable LERCHZETA_SIMD is set to "scalar".
const KernelTable& active();

inline void exp_batch(std::span<const double> x, std::span<double> out) {
  active().exp(x.data(), out.data(), x.size());
}
inline void expm1_batch(std::span<const double> x, std::span<double> out) {
  active().expm1(x.data(), out.data(), x.size());
}
inline void log_batch(std::span<const double> x, std::span<double> out) {
  active().log(x.data(), out.data(), x.size());
}
inline void pow_batch(std::span<const double> x, double exponent, std::span<double> out) {
  active().pow(x.data(), exponent, out.data(), x.size());
}
inline void h_direct_batch(double a, std::span<const double> x, std::span<double> out) {
  active().h_direct(a, x.data(), out.data(), x.size());
}
inline double power_sum(double shift, std::size_t count, double exponent) {
  return active().power_sum(shift, count, exponent);
}

}  // namespace lerchzeta::simd
