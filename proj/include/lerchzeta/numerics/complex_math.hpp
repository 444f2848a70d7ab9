#pragma once

#include <cmath>

#include "lerchzeta/types.hpp"

namespace lerchzeta::numerics {

/// sin(pi x) and cos(pi x) with exact argument reduction, so integer and
/// half-integer arguments give exact zeros.
double sin_pi(double x);
double cos_pi(double x);
cplx sin_pi(cplx z);

/// e^z - 1 without cancellation for small |z|.
cplx expm1(cplx z);

/// (e^z - 1) / z, equal to 1 at z = 0.
cplx exprel(cplx z);

/// b^(-s) for a positive real base, principal branch.
inline cplx pow_neg(double base, cplx s) {
  if (s.imag() == 0.0) return std::pow(base, -s.real());
  return std::exp(-s * std::log(base));
}

}  // namespace lerchzeta::numerics
