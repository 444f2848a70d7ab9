#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lerchzeta/numerics/complex_math.hpp"
#include "lerchzeta/numerics/quadrature.hpp"
#include "lerchzeta/types.hpp"

namespace lerchzeta::detail {

using numerics::pow_neg;

inline numerics::Quadrature quadrature_for(const EvalConfig& cfg, double alpha) {
  numerics::Quadrature q;
  q.abs_tol = cfg.abs_tol;
  q.rel_tol = cfg.rel_tol;
  q.max_depth = cfg.max_depth;
  q.singularity_exponent = alpha;
  return q;
}

/// x^(i t) for x > 0.
inline cplx pow_imag(double x, double t) {
  if (t == 0.0) return 1.0;
  const double ph = t * std::log(x);
  return {std::cos(ph), std::sin(ph)};
}

/// Angle of the integration ray x = r e^(i phi) for Mellin integrals with
/// Im(s) = t. The integrand's e^(pi |t|/2) cancellation against 1/Gamma(s)
/// drops to e^((pi/2 - |phi|) |t|), kept near 1e3; for |t| <= 1 the real
/// axis is used.
inline double ray_angle(double t) {
  if (std::abs(t) <= 1.0) return 0.0;
  const double gap = std::clamp(7.0 / std::abs(t), 0.02, std::numbers::pi / 4.0);
  return std::copysign(std::numbers::pi / 2.0 - gap, t);
}

inline double target_tol(const EvalConfig& cfg, double magnitude) {
  return std::max(cfg.abs_tol, cfg.rel_tol * magnitude);
}

}  // namespace lerchzeta::detail
