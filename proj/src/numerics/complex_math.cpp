#include "lerchzeta/numerics/complex_math.hpp"

#include <cmath>
#include <numbers>

namespace lerchzeta::numerics {

double sin_pi(double x) {
  if (x == std::floor(x)) return std::copysign(0.0, x);
  double r = std::remainder(x, 2.0);  // r in [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(std::numbers::pi * r);
}

double cos_pi(double x) {
  double r = std::fabs(std::remainder(x, 2.0));  // r in [0, 1]
  if (r == 0.5) return 0.0;
  if (r > 0.5) return -std::cos(std::numbers::pi * (1.0 - r));
  return std::cos(std::numbers::pi * r);
}

cplx sin_pi(cplx z) {
  const double y = std::numbers::pi * z.imag();
  return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

cplx expm1(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  if (y == 0.0) return {std::expm1(x), 0.0};
  const double half_sin = std::sin(0.5 * y);
  // cos(y) - 1 = -2 sin^2(y/2)
  const double re = std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

cplx exprel(cplx z) {
  if (std::abs(z) < 1e-3) {
    return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0)));
  }
  return expm1(z) / z;
}

}  // namespace lerchzeta::numerics
