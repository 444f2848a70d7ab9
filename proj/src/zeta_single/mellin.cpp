#include "mellin.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "common.hpp"
#include "lerchzeta/errors.hpp"
#include "lerchzeta/numerics/bernoulli.hpp"
#include "lerchzeta/numerics/complex_math.hpp"
#include "lerchzeta/numerics/gamma.hpp"

namespace lerchzeta::detail {

namespace {

// R(x) = (x/(1 - e^(-x)) - 1 - x/2) / x^2 = sum_{k>=1} B_2k x^(2k-2) / (2k)!
cplx bernoulli_remainder(cplx x) {
  if (std::abs(x) < 1.0) {
    static const std::vector<double> c = [] {
      const auto& bern = numerics::BernoulliTable::standard();
      std::vector<double> v;
      double fact = 2.0;
      for (int k = 1; k <= 14; ++k) {
        v.push_back(bern.number(2 * k) / fact);
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
      }
      return v;
    }();
    const cplx x2 = x * x;
    cplx acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x2 + *it;
    return acc;
  }
  return (x / -numerics::expm1(-x) - 1.0 - 0.5 * x) / (x * x);
}

}  // namespace

Estimate mellin_lerch(cplx s, double b, cplx z, bool z_is_one, const EvalConfig& cfg) {
  const double sigma = s.real();
  const double t = s.imag();
  if (!(b > 0.0)) throw DomainError("mellin_lerch: shift must be positive");
  if (z_is_one) {
    if (!(sigma > 1.0)) throw DomainError("mellin_lerch: z = 1 needs Re(s) > 1");
  } else if (!(sigma > 0.0)) {
    throw DomainError("mellin_lerch: needs Re(s) > 0");
  }
  // The behaviour at x = 0 is integrated in closed form, so what remains
  // carries x^sigma and needs no power substitution (which would multiply the
  // oscillation of x^(it) by 1/sigma).
  //   z = 1:  b^(1-s)/(s-1) + b^(-s)/2 + (1/Gamma(s)) int x^s e^(-bx) R(x) dx
  //   z != 1: b^(-s)/(1-z) + (1/Gamma(s)) int x^s e^(-bx) Q(x) dx,
  //           Q(x) = (1/(1 - z e^(-x)) - 1/(1-z)) / x
  // For |t| > 1 the integral runs along a ray in the right half-plane (see
  // ray_angle). The poles of 1/(1 - z e^(-x)) have Re(x) <= 0, so the value
  // is unchanged.
  const double phi = ray_angle(t);
  const cplx w = std::polar(1.0, phi);
  const cplx bs = numerics::pow_neg(b, s);
  numerics::Integral<cplx> r;
  cplx closed;
  if (z_is_one) {
    closed = b * bs / (s - 1.0) + 0.5 * bs;
    auto f = [&](double x) -> cplx {
      const cplx xw = x * w;
      return pow_imag(x, t) * std::exp(-b * xw) * bernoulli_remainder(xw);
    };
    r = numerics::integrate_semi_infinite<cplx>(f, quadrature_for(cfg, sigma));
  } else {
    const cplx c = 1.0 - z;
    closed = bs / c;
    const cplx log_z = std::log(z);
    auto f = [&](double x) -> cplx {
      const cplx xw = x * w;
      const cplx e1 = x == 0.0 ? cplx(1.0) : -numerics::expm1(-xw) / xw;  // (1 - e^(-x))/x
      return pow_imag(x, t) * std::exp(-b * xw) * (-z * e1 / (-numerics::expm1(log_z - xw) * c));
    };
    r = numerics::integrate_semi_infinite<cplx>(f, quadrature_for(cfg, sigma));
  }
  const cplx scale = std::exp((s + 1.0) * cplx(0.0, phi)) / numerics::gamma(s);
  return {closed + scale * r.value, std::abs(scale) * r.error};
}

}  // namespace lerchzeta::detail
