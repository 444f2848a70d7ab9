#include <cmath>

#include "tables.hpp"

namespace lerchzeta::simd::detail {
namespace {

void exp_ref(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(x[i]);
}

void expm1_ref(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::expm1(x[i]);
}

void log_ref(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::log(x[i]);
}

void pow_ref(const double* x, double exponent, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::pow(x[i], exponent);
}

void h_direct_ref(double a, const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(-a * x[i]) / -std::expm1(-x[i]) - 1.0 / x[i];
  }
}

double power_sum_ref(double shift, std::size_t count, double exponent) {
  CompensatedSum acc;
  for (std::size_t k = 0; k < count; ++k) {
    acc.add(std::pow(static_cast<double>(k) + shift, -exponent));
  }
  return acc.value();
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar, "scalar", exp_ref,      expm1_ref,
                                 log_ref,     pow_ref,  h_direct_ref, power_sum_ref};
  return table;
}

}  // namespace lerchzeta::simd::detail
