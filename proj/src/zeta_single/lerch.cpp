#include "lerchzeta/zeta_single/lerch.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "common.hpp"
#include "lerchzeta/errors.hpp"
#include "lerchzeta/numerics/complex_math.hpp"
#include "lerchzeta/zeta_single/eval_point.hpp"
#include "lerchzeta/zeta_single/hurwitz.hpp"
#include "mellin.hpp"

namespace lerchzeta {

void EvalPoint::validate() const {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("shift a must lie in (0, 1], got " + std::to_string(a));
  const double r = std::abs(z);
  if (!(r > 0.0 && r <= 1.0 + 1e-12)) throw DomainError("twist z must satisfy 0 < |z| <= 1");
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("s must be finite");
}

bool EvalPoint::z_is_one() const { return std::abs(z - 1.0) < kUnitTwistTol; }

namespace {

constexpr long kMellinSplit = 64;
constexpr long kMaxGeometricTerms = 2'000'000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_twist(cplx z) {
  const double r = std::abs(z);
  if (!(r > 0.0 && r <= 1.0 + 1e-12)) throw DomainError("lerch: twist must satisfy 0 < |z| <= 1");
  if (std::abs(z - 1.0) < kUnitTwistTol) {
    throw DomainError("lerch: z = 1 is excluded (use the Hurwitz evaluators)");
  }
}

// sum_{n=0}^{count-1} z^n (n+a)^(-s), compensated.
cplx twisted_sum(cplx s, double a, cplx z, long count, double& mass) {
  cplx acc = 0.0;
  cplx comp = 0.0;
  cplx zn = 1.0;
  mass = 0.0;
  for (long n = 0; n < count; ++n) {
    const cplx term = zn * numerics::pow_neg(static_cast<double>(n) + a, s);
    mass += std::abs(term);
    const cplx y = term - comp;
    const cplx t = acc + y;
    comp = (t - acc) - y;
    acc = t;
    zn *= z;
    if ((n & 63) == 63) zn = std::polar(std::pow(std::abs(z), n + 1.0), std::arg(z) * (n + 1.0));
  }
  return acc;
}

}  // namespace

Estimate lerch_series(cplx s, double a, cplx z, const EvalConfig& cfg) {
  if (!(a > 0.0)) throw DomainError("lerch_series: shift must be positive");
  check_twist(z);
  const double sigma = s.real();
  const double r = std::abs(z);
  const bool on_circle = r > 1.0 - 1e-12;
  if (on_circle && !(sigma > 1.0)) {
    throw DomainError("lerch_series: |z| = 1 needs Re(s) > 1 (use lerch_integral in the strip)");
  }
  if (!on_circle && !(sigma > 0.0)) throw DomainError("lerch_series: needs Re(s) > 0");

  const double scale = std::pow(a, -sigma);
  const double tol = detail::target_tol(cfg, scale) * 0.5;
  if (!on_circle) {
    // smallest N with r^N (N+a)^(-sigma) / (1-r) <= tol; (N+a)^(-sigma) <= a^(-sigma)
    long N = 1;
    double bound = scale / (1.0 - r);
    const double logr = std::log(r);
    const double guess = std::log(tol * (1.0 - r) / scale) / logr;
    if (guess > 1.0) N = static_cast<long>(std::ceil(guess));
    if (N > kMaxGeometricTerms) {
      N = kMaxGeometricTerms;
    }
    while (true) {
      bound = std::exp(N * logr) * std::pow(static_cast<double>(N) + a, -sigma) / (1.0 - r);
      if (bound <= tol || N >= kMaxGeometricTerms) break;
      N = std::min(kMaxGeometricTerms, N * 2);
    }
    if (bound > tol) {
      // too close to the circle for plain summation: integral tail
      double mass = 0.0;
      const cplx head = twisted_sum(s, a, z, kMellinSplit, mass);
      const Estimate tail = detail::mellin_lerch(s, static_cast<double>(kMellinSplit) + a, z, false, cfg);
      const cplx zN = std::pow(z, static_cast<double>(kMellinSplit));
      return {head + zN * tail.value, tail.error + 4.0 * kEps * mass};
    }
    double mass = 0.0;
    const cplx head = twisted_sum(s, a, z, N, mass);
    return {head, bound + 4.0 * kEps * mass};
  }
  double mass = 0.0;
  const cplx head = twisted_sum(s, a, z, kMellinSplit, mass);
  const Estimate tail = detail::mellin_lerch(s, static_cast<double>(kMellinSplit) + a, z, false, cfg);
  const cplx zN = std::pow(z, static_cast<double>(kMellinSplit));
  return {head + zN * tail.value, tail.error + 4.0 * kEps * mass};
}

Estimate lerch_integral(cplx s, double a, cplx z, const EvalConfig& cfg) {
  if (!(a > 0.0)) throw DomainError("lerch_integral: shift must be positive");
  check_twist(z);
  if (!(s.real() > 0.0)) throw DomainError("lerch_integral: needs Re(s) > 0");
  return detail::mellin_lerch(s, a, z, false, cfg);
}

Estimate lerch(cplx s, double a, cplx z, const EvalConfig& cfg) {
  check_twist(z);
  if (s.real() > 1.0 || std::abs(z) < 1.0 - 1e-12) return lerch_series(s, a, z, cfg);
  return lerch_integral(s, a, z, cfg);
}

Estimate polylog(cplx s, cplx z, const EvalConfig& cfg) {
  if (std::abs(z - 1.0) < kUnitTwistTol) {
    if (!(s.real() > 1.0)) throw DomainError("polylog: z = 1 needs Re(s) > 1");
    return hurwitz(s, 1.0, HurwitzMethod::Automatic, cfg);
  }
  const Estimate phi = lerch(s, 1.0, z, cfg);
  return {z * phi.value, std::abs(z) * phi.error};
}

}  // namespace lerchzeta
