#include "lerchzeta/numerics/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lerchzeta/errors.hpp"
#include "lerchzeta/numerics/complex_math.hpp"

namespace lerchzeta::numerics {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Valid for Re(s) >= 1/2.
cplx lanczos_gamma(cplx s) {
  const cplx z = s - 1.0;
  cplx series = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
    series += kLanczosCoeffs[k] / (z + static_cast<double>(k));
  }
  const cplx t = z + kLanczosG + 0.5;
  const double log_sqrt_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return std::exp((z + 0.5) * std::log(t) - t + log_sqrt_two_pi) * series;
}

}  // namespace

cplx gamma(cplx s) {
  if (is_nonpositive_integer(s)) {
    throw PoleError("gamma: pole at s = " + std::to_string(s.real()));
  }
  if (s.real() < 0.5) {
    return std::numbers::pi / (sin_pi(s) * lanczos_gamma(1.0 - s));
  }
  return lanczos_gamma(s);
}

cplx gamma_reflection_product(cplx s) {
  if (s.imag() == 0.0 && s.real() == std::floor(s.real())) {
    throw PoleError("gamma_reflection_product: pole at integer s = " +
                    std::to_string(s.real()));
  }
  return std::numbers::pi / sin_pi(s);
}

}  // namespace lerchzeta::numerics
