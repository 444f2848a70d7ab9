#pragma once

#include "lerchzeta/types.hpp"

namespace lerchzeta::detail {

/// (1/Gamma(s)) int_0^inf x^(s-1) e^(-b x) / (1 - z e^(-x)) dx, which equals
/// sum_{n>=0} z^n (n+b)^(-s). With z_is_one the integrand behaves like
/// x^(s-2) at the origin and Re(s) > 1 is required; otherwise Re(s) > 0.
Estimate mellin_lerch(cplx s, double b, cplx z, bool z_is_one, const EvalConfig& cfg);

}  // namespace lerchzeta::detail
