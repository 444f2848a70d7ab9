#include "lerchzeta/zeta_double/double_zeta.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "../zeta_single/common.hpp"
#include "detail.hpp"
#include "lerchzeta/errors.hpp"
#include "lerchzeta/kernel/kernel.hpp"
#include "lerchzeta/numerics/gamma.hpp"
#include "lerchzeta/numerics/quadrature.hpp"
#include "lerchzeta/zeta_single/hurwitz.hpp"
#include "lerchzeta/zeta_single/lerch.hpp"

namespace lerchzeta {
namespace {

constexpr int kSeriesTerms = 64;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string fmt(const DoublePoint& p) {
  auto c = [](cplx v) {
    std::string out = std::to_string(v.real());
    if (v.imag() != 0.0) out += (v.imag() < 0 ? "" : "+") + std::to_string(v.imag()) + "i";
    return out;
  };
  return "(s1=" + c(p.s1) + ", s2=" + c(p.s2) + ", a=" + std::to_string(p.a) + ", z1=" + c(p.z1) +
         ", z2=" + c(p.z2) + ")";
}

cplx gamma_product(cplx s1, cplx s2) { return numerics::gamma(s1) * numerics::gamma(s2); }

bool in_strip(double s1, double s2) { return s1 > 0.0 && s1 < 1.0 && s2 > 1.0 && s1 + s2 > 1.0 && s1 + s2 < 2.0; }

}  // namespace

const char* region_name(DoubleRegion r) {
  switch (r) {
    case DoubleRegion::SeriesAbs: return "series-abs";
    case DoubleRegion::Strip1: return "strip-1";
    case DoubleRegion::Case2: return "case-2";
    case DoubleRegion::Case3: return "case-3";
    case DoubleRegion::Case4: return "case-4";
    case DoubleRegion::AiContinued: return "ai-continued";
    case DoubleRegion::Outside: return "outside";
  }
  return "?";
}

void DoublePoint::validate() const {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("shift a must lie in (0, 1], got " + std::to_string(a));
  for (cplx z : {z1, z2}) {
    const double r = std::abs(z);
    if (!(r > 0.0 && r <= 1.0 + 1e-15)) throw DomainError("twist parameters need 0 < |z| <= 1");
  }
}

bool DoublePoint::z1_is_one() const { return std::abs(z1 - 1.0) < detail::kUnitTol; }
bool DoublePoint::z2_is_one() const { return std::abs(z2 - 1.0) < detail::kUnitTol; }

DoubleRegion DoublePoint::region() const {
  const double x1 = s1.real();
  const double x2 = s2.real();
  const bool one1 = z1_is_one();
  const bool one2 = z2_is_one();
  if (one1 && one2) {
    if (x1 > 0.0 && x2 > 1.0 && x1 + x2 > 2.0) return DoubleRegion::SeriesAbs;
    if (in_strip(x1, x2)) return DoubleRegion::Strip1;
    return DoubleRegion::AiContinued;
  }
  if (x1 > 1.0 && x2 > 1.0) return DoubleRegion::SeriesAbs;
  if (one1 && x1 > 1.0 && x2 > 0.0) return DoubleRegion::Case2;
  if (one2 && x1 > 0.0 && x2 > 1.0) return DoubleRegion::Case3;
  if (!one1 && !one2 && x1 > 0.0 && x2 > 0.0) return DoubleRegion::Case4;
  return DoubleRegion::Outside;
}

namespace detail {

Estimate phi2_integral(cplx s1, cplx s2, double shift, cplx z1, cplx z2, bool z1_one, bool z2_one,
                       const EvalConfig& cfg) {
  const double sig1 = s1.real();
  const double sig2 = s2.real();
  const double t1 = s1.imag();
  const double t2 = s2.imag();
  const cplx c2 = 1.0 - z2;
  auto fy = [&](double y) -> cplx { return z2_one ? cplx(y / std::expm1(y)) : 1.0 / (std::expm1(y) + c2); };
  const auto q = quadrature_for(cfg, 0.0);
  numerics::Integral<cplx> r;
  const double alpha_y = z2_one ? sig2 - 2.0 : sig2 - 1.0;
  if (z1_one) {
    // u = x + y, x = u t: the 1/(1 - e^(-x-y)) factor only depends on u, and the
    // inner integral over t in [0,1] has nothing but endpoint singularities.
    // With z2 = 1 as well, 1/(e^y - 1) = g(y)/y with g(v) = v/(e^v - 1) moves
    // one power to (1-t) and one to u.
    numerics::Quadrature inner = q.tightened(0.1);
    inner.abs_tol = 0.0;
    if (!(inner.rel_tol > 0.0)) inner.rel_tol = 1e-14;
    auto g = [](double v) { return v == 0.0 ? 1.0 : v / std::expm1(v); };
    const double drop = z2_one ? 1.0 : 0.0;
    auto kernel_t = [&](double u) -> cplx {
      auto den = [&](double w) -> cplx { return z2_one ? cplx(g(u * w)) : 1.0 / (std::expm1(u * w) + c2); };
      auto near0 = [&](double tau) -> cplx {
        const double t = 0.5 * tau;
        return std::pow(1.0 - t, sig2 - 1.0 - drop) * pow_imag(t, t1) * pow_imag(1.0 - t, t2) * den(1.0 - t);
      };
      auto near1 = [&](double tau) -> cplx {
        const double w = 0.5 * tau;
        return std::pow(1.0 - w, sig1 - 1.0) * pow_imag(1.0 - w, t1) * pow_imag(w, t2) * den(w);
      };
      const auto k0 = numerics::integrate_unit(near0, inner.with_exponent(sig1 - 1.0));
      const auto k1 = numerics::integrate_unit(near1, inner.with_exponent(sig2 - 1.0 - drop));
      return std::pow(0.5, sig1) * k0.value + std::pow(0.5, sig2 - drop) * k1.value;
    };
    auto f = [&](double u) -> cplx {
      const double decay = std::exp(-shift * u);
      if (decay == 0.0) return 0.0;
      const double bern = u == 0.0 ? 1.0 : u / -std::expm1(-u);
      return decay * bern * kernel_t(u) * pow_imag(u, t1 + t2);
    };
    r = numerics::integrate_semi_infinite(f, q.with_exponent(sig1 + sig2 - 2.0 - drop));
  } else {
    auto f = [&](double x, double y) -> cplx {
      const double decay = std::exp(-shift * (x + y));
      return decay / (1.0 - z1 * std::exp(-x - y)) * fy(y) * pow_imag(x, t1) * pow_imag(y, t2);
    };
    r = numerics::integrate_double_semi_infinite(f, q, sig1 - 1.0, alpha_y);
  }
  const cplx g = gamma_product(s1, s2);
  return {r.value / g, r.error / std::abs(g)};
}

}  // namespace detail

Estimate double_series(const DoublePoint& p, const EvalConfig& cfg) {
  p.validate();
  const double x1 = p.s1.real();
  const double x2 = p.s2.real();
  const bool one1 = p.z1_is_one();
  const bool one2 = p.z2_is_one();
  if (one1 && one2) {
    if (in_strip(x1, x2)) {
      throw DomainError("double_series: the double series does not converge absolutely on the strip " +
                        fmt(p) + "; use double_strip or ai_continuation");
    }
    if (!(x1 > 0.0 && x2 > 1.0 && x1 + x2 > 2.0)) {
      throw DomainError("double_series: needs Re(s1) > 0, Re(s2) > 1, Re(s1+s2) > 2 at " + fmt(p));
    }
  } else if (!(x1 > 1.0 && x2 > 1.0)) {
    throw DomainError("double_series: twisted series needs Re(s1), Re(s2) > 1 at " + fmt(p));
  }

  const int M = kSeriesTerms;
  const double aM = p.a + M;
  // inner(m) = Phi(s2, a+m+1, z2), run backwards from m = M-1
  const Estimate start = one2 ? hurwitz(p.s2, aM, HurwitzMethod::Automatic, cfg) : lerch(p.s2, aM, p.z2, cfg);
  std::vector<cplx> zpow(M + 1);
  zpow[0] = 1.0;
  for (int m = 1; m <= M; ++m) zpow[m] = one1 ? cplx(1.0) : zpow[m - 1] * p.z1;

  cplx inner = start.value;
  cplx acc = 0.0;
  double mass = 0.0;
  double weight = 0.0;  // sum |z1^m (m+a)^(-s1)|, scales the error of the inner start value
  for (int m = M - 1; m >= 0; --m) {
    const double base = m + p.a;
    const cplx outer = zpow[m] * numerics::pow_neg(base, p.s1);
    const cplx term = outer * inner;
    acc += term;
    mass += std::abs(term);
    weight += std::abs(outer);
    inner = numerics::pow_neg(base, p.s2) + (one2 ? inner : p.z2 * inner);
  }
  const Estimate tail = detail::phi2_integral(p.s1, p.s2, aM, p.z1, p.z2, one1, one2, cfg);
  const cplx tail_value = zpow[M] * tail.value;
  return {acc + tail_value, start.error * weight + tail.error + 8.0 * kEps * mass};
}

Estimate double_integral(const DoublePoint& p, const EvalConfig& cfg) {
  p.validate();
  const double x1 = p.s1.real();
  const double x2 = p.s2.real();
  const bool one1 = p.z1_is_one();
  const bool one2 = p.z2_is_one();
  bool ok = false;
  std::string need;
  if (one1 && one2) {
    ok = x1 > 0.0 && x2 > 1.0 && x1 + x2 > 2.0;
    need = "Re(s1) > 0, Re(s2) > 1, Re(s1+s2) > 2";
  } else if (one1) {
    ok = x1 > 1.0 && x2 > 0.0;
    need = "Re(s1) > 1, Re(s2) > 0 (z1 = 1)";
  } else if (one2) {
    ok = x1 > 0.0 && x2 > 1.0;
    need = "Re(s1) > 0, Re(s2) > 1 (z2 = 1)";
  } else {
    ok = x1 > 0.0 && x2 > 0.0;
    need = "Re(s1), Re(s2) > 0";
  }
  if (!ok) throw DomainError("double_integral: needs " + need + " at " + fmt(p));
  return detail::phi2_integral(p.s1, p.s2, p.a, p.z1, p.z2, one1, one2, cfg);
}

Estimate double_strip(const DoublePoint& p, StripForm form, const EvalConfig& cfg) {
  p.validate();
  if (!p.z1_is_one() || !p.z2_is_one()) throw DomainError("double_strip: needs z1 = z2 = 1");
  const double x1 = p.s1.real();
  const double x2 = p.s2.real();
  if (!in_strip(x1, x2)) {
    throw DomainError("double_strip: needs 0 < Re(s1) < 1, Re(s2) > 1, 1 < Re(s1+s2) < 2 at " + fmt(p));
  }
  const double t1 = p.s1.imag();
  const double t2 = p.s2.imag();
  const double a = p.a;
  const auto q = detail::quadrature_for(cfg, 0.0);

  // int int y^(s2-1)/(e^y - 1) H(a, x+y) x^(s1-1) dx dy
  auto f1 = [&](double x, double y) -> cplx {
    const cplx v = (y / std::expm1(y)) * kernel::h_kernel(a, x + y);
    return v * detail::pow_imag(x, t1) * detail::pow_imag(y, t2);
  };
  const auto first = numerics::integrate_double_semi_infinite(f1, q, x1 - 1.0, x2 - 2.0);

  numerics::Integral<cplx> second;
  cplx second_scale = 1.0;
  if (form == StripForm::Starred) {
    // int int x^(s1-1)/(x+y) H(1,y) y^(s2-1) dx dy with x = y v, which moves the
    // near-singularity at x = -y to the fixed point v = -1
    auto f2 = [&](double v, double y) -> cplx {
      const cplx h = kernel::h_kernel(1.0, y) / (1.0 + v);
      return h * detail::pow_imag(v, t1) * detail::pow_imag(y, t1 + t2);
    };
    second = numerics::integrate_double_semi_infinite(f2, q, x1 - 1.0, x1 + x2 - 2.0);
  } else {
    auto f2 = [&](double y) -> cplx { return kernel::h_kernel(1.0, y) * detail::pow_imag(y, t1 + t2); };
    second = numerics::integrate_semi_infinite(f2, q.with_exponent(x1 + x2 - 2.0));
    second_scale = numerics::gamma_reflection_product(p.s1);
  }
  const cplx g = gamma_product(p.s1, p.s2);
  const cplx value = (first.value + second_scale * second.value) / g;
  return {value, (first.error + std::abs(second_scale) * second.error) / std::abs(g)};
}

TwistSignEvidence complex_twist_sign_parts(const DoublePoint& p, const EvalConfig& cfg) {
  p.validate();
  if (p.z1.imag() == 0.0 || p.z2.imag() == 0.0) {
    throw DomainError("complex_twist_sign_parts: both z1 and z2 must be non-real");
  }
  if (p.s1.imag() != 0.0 || p.s2.imag() != 0.0 || !(p.s1.real() > 0.0) || !(p.s2.real() > 0.0)) {
    throw DomainError("complex_twist_sign_parts: needs real sigma1, sigma2 > 0");
  }
  TwistSignEvidence ev;
  // conj z = r e^(2 pi i theta) gives sin(2 pi theta) = -Im z / |z|
  ev.sin_product = (p.z1.imag() / std::abs(p.z1)) * (p.z2.imag() / std::abs(p.z2));
  const Estimate v = double_integral(p, cfg);
  ev.value = v.value;
  ev.error = v.error;
  if (ev.sin_product > 0.0) {
    ev.claim = TwistClaim::ImaginaryNonzero;
    ev.predicted_im_sign = p.z1.imag() > 0.0 ? 1 : -1;
    ev.holds = std::abs(v.value.imag()) > v.error && (v.value.imag() > 0.0) == (ev.predicted_im_sign > 0);
  } else {
    ev.claim = TwistClaim::RealPositive;
    ev.holds = v.value.real() > v.error;
  }
  return ev;
}

Estimate double_zeta(const DoublePoint& p, const EvalConfig& cfg) {
  p.validate();
  switch (p.region()) {
    case DoubleRegion::SeriesAbs: return double_series(p, cfg);
    case DoubleRegion::Strip1:  // the strip integrals decay like u^(s1+s2-3) and stall as s1+s2 -> 2
    case DoubleRegion::AiContinued: return ai_continuation(p, {}, cfg);
    case DoubleRegion::Case2:
    case DoubleRegion::Case3:
    case DoubleRegion::Case4: return double_integral(p, cfg);
    case DoubleRegion::Outside: break;
  }
  throw DomainError("double_zeta: no representation covers " + fmt(p));
}

}  // namespace lerchzeta
