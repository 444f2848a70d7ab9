#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace lerchzeta::kernel {

struct KernelParams {
  double a = 1.0;
  double taylor_cutoff = 1e-3;
  int taylor_terms = 8;

  /// Throws DomainError unless 0 < a <= 1, 0 < taylor_cutoff <= 0.1 and
  /// 1 <= taylor_terms <= 20.
  void validate() const;
};

/// H(a,x) = e^((1-a)x)/(e^x - 1) - 1/x for x > 0.
///
/// Below the cutoff the value is the ratio of the two power series
/// sum c_k x^k / sum d_k x^k with c_k = (1-a)^(k+1)/(k+1)! - 1/(k+2)! and
/// d_k = 1/(k+1)!, which avoids the cancellation against 1/x. Above it the
/// direct form is written as e^(-ax)/(1 - e^(-x)) - 1/x so that nothing
/// overflows for large x.
double h_kernel(double a, double x);
double h_kernel(const KernelParams& p, double x);

/// Same as h_kernel over a span; the direct branch runs on the SIMD kernels.
void h_kernel_batch(const KernelParams& p, std::span<const double> x, std::span<double> out);

/// h(a,x) = x e^((1-a)x) - e^x + 1, evaluated directly.
double h_numerator(double a, double x);

enum class Verdict { NegativeDefiniteEvidence, SignChangeFound, Inconclusive };

const char* verdict_name(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  double x0 = std::numeric_limits<double>::quiet_NaN();  // first x with H >= 0
  std::size_t points_checked = 0;
  bool inequality_checked = false;
  bool inequality_holds = false;  // 1 + (1-a)x < e^(ax) on the whole grid
};

/// n log-spaced points on [lo, hi]; defaults give the standard grid.
std::vector<double> log_grid(std::size_t n = 200, double lo = 1e-6, double hi = 50.0);

/// Sample H(a,.) on a sorted grid. Any x with H >= 0 gives SignChangeFound
/// at the smallest such x. Otherwise, for a >= 1/2, the inequality
/// 1 + (1-a)x < e^(ax) is checked at every point (as expm1(ax) > (1-a)x)
/// and NegativeDefiniteEvidence is returned when it holds. All remaining
/// cases (a < 1/2 without a positive sample, or a failed inequality) are
/// Inconclusive.
Certificate negativity_certificate(double a, std::span<const double> grid);

}  // namespace lerchzeta::kernel
