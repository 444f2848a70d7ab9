#include "lerchzeta/kernel/kernel.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lerchzeta/errors.hpp"
#include "lerchzeta/simd/kernels.hpp"

namespace lerchzeta::kernel {
namespace {

constexpr int kMaxTerms = 20;

void check_a(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("kernel: shift a must lie in (0, 1], got " + std::to_string(a));
}

double taylor_ratio(double a, double x, int terms) {
  std::array<double, kMaxTerms> c{};
  std::array<double, kMaxTerms> d{};
  double pw = 1.0 - a;   // (1-a)^(k+1)
  double f1 = 1.0;       // (k+1)!
  double f2 = 2.0;       // (k+2)!
  for (int k = 0; k < terms; ++k) {
    c[k] = pw / f1 - 1.0 / f2;
    d[k] = 1.0 / f1;
    pw *= 1.0 - a;
    f1 *= k + 2;
    f2 *= k + 3;
  }
  double num = 0.0;
  double den = 0.0;
  for (int k = terms - 1; k >= 0; --k) {
    num = num * x + c[k];
    den = den * x + d[k];
  }
  return num / den;
}

}  // namespace

void KernelParams::validate() const {
  check_a(a);
  if (!(taylor_cutoff > 0.0 && taylor_cutoff <= 0.1)) throw DomainError("kernel: taylor_cutoff must lie in (0, 0.1]");
  if (taylor_terms < 1 || taylor_terms > kMaxTerms) throw DomainError("kernel: taylor_terms must lie in [1, 20]");
}

double h_kernel(const KernelParams& p, double x) {
  p.validate();
  if (!(x > 0.0)) throw DomainError("h_kernel: x must be positive");
  if (x < p.taylor_cutoff) return taylor_ratio(p.a, x, p.taylor_terms);
  return std::exp(-p.a * x) / -std::expm1(-x) - 1.0 / x;
}

double h_kernel(double a, double x) { return h_kernel(KernelParams{a}, x); }

void h_kernel_batch(const KernelParams& p, std::span<const double> x, std::span<double> out) {
  p.validate();
  for (double v : x) {
    if (!(v > 0.0)) throw DomainError("h_kernel: x must be positive");
  }
  simd::h_direct_batch(p.a, x, out);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < p.taylor_cutoff) out[i] = taylor_ratio(p.a, x[i], p.taylor_terms);
  }
}

double h_numerator(double a, double x) { return x * std::exp((1.0 - a) * x) - std::expm1(x); }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NegativeDefiniteEvidence:
      return "negative-definite-evidence";
    case Verdict::SignChangeFound:
      return "sign-change-found";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::vector<double> log_grid(std::size_t n, double lo, double hi) {
  if (n == 0 || !(lo > 0.0) || !(hi >= lo)) throw DomainError("log_grid: need n >= 1 and 0 < lo <= hi");
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo * std::exp(step * static_cast<double>(i));
  g.back() = hi;
  return g;
}

Certificate negativity_certificate(double a, std::span<const double> grid) {
  check_a(a);
  if (grid.empty()) throw DomainError("negativity_certificate: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw DomainError("negativity_certificate: grid points must be positive");
    if (i > 0 && grid[i] < grid[i - 1]) throw DomainError("negativity_certificate: grid must be sorted");
  }
  Certificate cert;
  std::vector<double> h(grid.size());
  h_kernel_batch(KernelParams{a}, grid, h);
  cert.points_checked = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (h[i] >= 0.0) {
      cert.verdict = Verdict::SignChangeFound;
      cert.x0 = grid[i];
      return cert;
    }
  }
  if (a < 0.5) return cert;
  cert.inequality_checked = true;
  cert.inequality_holds = true;
  for (double x : grid) {
    if (!(std::expm1(a * x) - (1.0 - a) * x > 0.0)) {
      cert.inequality_holds = false;
      break;
    }
  }
  if (cert.inequality_holds) cert.verdict = Verdict::NegativeDefiniteEvidence;
  return cert;
}

}  // namespace lerchzeta::kernel
