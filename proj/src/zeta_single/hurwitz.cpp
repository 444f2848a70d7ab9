#include "lerchzeta/zeta_single/hurwitz.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "common.hpp"
#include "lerchzeta/errors.hpp"
#include "lerchzeta/kernel/kernel.hpp"
#include "lerchzeta/numerics/bernoulli.hpp"
#include "lerchzeta/numerics/complex_math.hpp"
#include "lerchzeta/numerics/gamma.hpp"
#include "lerchzeta/numerics/gauss_legendre.hpp"
#include "lerchzeta/simd/kernels.hpp"
#include "lerchzeta/zeta_single/lerch.hpp"
#include "mellin.hpp"

namespace lerchzeta {
namespace {

constexpr int kPanelPoints = 20;
constexpr long kMaxDirectTerms = 4096;
constexpr long kMellinSplit = 64;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string fmt(cplx s) {
  std::ostringstream o;
  o.precision(17);
  o << s.real();
  if (s.imag() != 0.0) o << (s.imag() < 0 ? "" : "+") << s.imag() << "i";
  return o.str();
}

void check_shift(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("hurwitz: shift a must be positive");
}

int default_terms(cplx s) { return std::max(10, static_cast<int>(std::ceil(std::abs(s)))); }

// sum_{n=0}^{count-1} (n+a)^(-s)
cplx power_sum(cplx s, double a, long count) {
  if (count <= 0) return 0.0;
  if (s.imag() == 0.0) return simd::power_sum(a, static_cast<std::size_t>(count), s.real());
  cplx acc = 0.0;
  cplx comp = 0.0;
  for (long n = 0; n < count; ++n) {
    const cplx y = numerics::pow_neg(static_cast<double>(n) + a, s) - comp;
    const cplx t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }
  return acc;
}

struct EmParts {
  cplx head;       // sum_{n=0}^{N} (n+a)^(-s)
  cplx remainder;  // -s int_N^inf (x-[x]) (x+a)^(-s-1) dx
  double error;
};

// int_0^1 u (u+w)^(-s-1) du in closed form; stable for small w.
cplx panel_exact(cplx s, double w) {
  const double L = std::log1p(1.0 / w);
  return numerics::pow_neg(w, s - 1.0) * L * (numerics::exprel((1.0 - s) * L) - numerics::exprel(-s * L));
}

EmParts em_parts(cplx s, double a, int N) {
  const auto& rule = numerics::gauss_legendre(kPanelPoints);
  EmParts out{};
  out.head = power_sum(s, a, static_cast<long>(N) + 1);
  const int K = std::max(N, 10 + static_cast<int>(std::ceil(std::abs(s))));

  cplx panels = 0.0;
  double panel_mass = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;  // includes the factor u
  for (int k = N; k < K; ++k) {
    const double w = static_cast<double>(k) + a;
    if (w < 2.0) {
      const cplx p = panel_exact(s, w);
      panels += p;
      panel_mass += std::abs(p);
      continue;
    }
    for (int i = 0; i < kPanelPoints; ++i) {
      const double u = 0.5 * (1.0 + rule.nodes[i]);
      nodes.push_back(u + w);
      weights.push_back(0.5 * rule.weights[i] * u);
    }
  }
  if (!nodes.empty()) {
    if (s.imag() == 0.0) {
      std::vector<double> pw(nodes.size());
      simd::pow_batch(nodes, -s.real() - 1.0, pw);
      double acc = 0.0;
      for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * pw[i];
      panels += acc;
      panel_mass += std::abs(acc);
    } else {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * numerics::pow_neg(nodes[i], s + 1.0);
      panels += acc;
      panel_mass += std::abs(acc);
    }
  }

  // Bernoulli asymptotic series for the part beyond K:
  //   -(K+a)^(-s)/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} (K+a)^(1-s-2j)
  const auto& tab = numerics::BernoulliTable::standard();
  const double wk = static_cast<double>(K) + a;
  const cplx base = numerics::pow_neg(wk, s);
  cplx tail = -0.5 * base;
  cplx poch = s;                  // (s)_{2j-1}
  cplx power = base / wk;         // (K+a)^(1-s-2j)
  double fact = 2.0;              // (2j)!
  double last = std::numeric_limits<double>::infinity();
  const double inv_w2 = 1.0 / (wk * wk);
  double tail_err = 0.0;
  for (int j = 1; 2 * j <= tab.degree(); ++j) {
    const cplx term = tab.number(2 * j) / fact * poch * power;
    const double mag = std::abs(term);
    if (mag > last) {  // asymptotic series started to grow
      tail_err = last;
      break;
    }
    tail += term;
    last = mag;
    tail_err = mag;
    if (mag <= kEps * 1e-3 * (std::abs(tail) + std::abs(out.head))) break;
    poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    power *= inv_w2;
    fact *= static_cast<double>((2 * j + 1) * (2 * j + 2));
  }
  out.remainder = -s * panels + tail;
  out.error = tail_err + 8.0 * kEps * (std::abs(out.head) + std::abs(s) * panel_mass + std::abs(tail));
  return out;
}

}  // namespace

Estimate hurwitz_series(cplx s, double a, const EvalConfig& cfg) {
  check_shift(a);
  const double sigma = s.real();
  if (!(sigma > 1.0)) throw DomainError("hurwitz_series: needs Re(s) > 1, got s = " + fmt(s));
  const double first = std::pow(a, -sigma);
  const double tol = detail::target_tol(cfg, first) * 0.5;
  // smallest N with (N+a)^(1-sigma)/(sigma-1) <= tol
  const double need = std::pow(tol * (sigma - 1.0), 1.0 / (1.0 - sigma)) - a;
  if (need <= static_cast<double>(kMaxDirectTerms)) {
    const long N = std::max(1L, static_cast<long>(std::ceil(need)));
    const cplx head = power_sum(s, a, N);
    const double bound = std::pow(static_cast<double>(N) + a, 1.0 - sigma) / (sigma - 1.0);
    return {head, bound + 4.0 * kEps * std::abs(head)};
  }
  const cplx head = power_sum(s, a, kMellinSplit);
  const Estimate tail = detail::mellin_lerch(s, static_cast<double>(kMellinSplit) + a, 1.0, true, cfg);
  return {head + tail.value, tail.error + 4.0 * kEps * std::abs(head)};
}

Estimate hurwitz_euler_maclaurin(cplx s, double a, int N, const EvalConfig& cfg) {
  (void)cfg;
  check_shift(a);
  if (s == cplx(1.0)) throw PoleError("hurwitz: pole at s = 1");
  if (!(s.real() > 0.0)) {
    throw DomainError("hurwitz_euler_maclaurin: needs Re(s) > 0, got s = " + fmt(s));
  }
  if (N < 0) N = default_terms(s);
  const EmParts p = em_parts(s, a, N);
  const cplx pole = numerics::pow_neg(static_cast<double>(N) + a, s - 1.0) / (s - 1.0);
  return {p.head + pole + p.remainder, p.error + 4.0 * kEps * std::abs(pole)};
}

Estimate hurwitz_regularized(cplx s, double a, int N, const EvalConfig& cfg) {
  (void)cfg;
  check_shift(a);
  if (!(s.real() > 0.0)) throw DomainError("hurwitz_regularized: needs Re(s) > 0, got s = " + fmt(s));
  if (N < 0) N = default_terms(s);
  const EmParts p = em_parts(s, a, N);
  // (N+a)^(1-s)/(s-1) - 1/(s-1) = -Lambda exprel((1-s) Lambda)
  const double lam = std::log(static_cast<double>(N) + a);
  const cplx pole = -lam * numerics::exprel((1.0 - s) * lam);
  return {p.head + pole + p.remainder, p.error + 4.0 * kEps * std::abs(pole)};
}

Estimate hurwitz_continued(cplx s, double a, const EvalConfig& cfg) {
  check_shift(a);
  if (s == cplx(1.0)) throw PoleError("hurwitz: pole at s = 1");
  if (!(s.real() > -20.0)) throw DomainError("hurwitz_continued: needs Re(s) > -20, got s = " + fmt(s));
  if (s.real() >= 0.0) {
    const int N = default_terms(s);
    const EmParts p = em_parts(s, a, N);
    const cplx pole = numerics::pow_neg(static_cast<double>(N) + a, s - 1.0) / (s - 1.0);
    return {p.head + pole + p.remainder, p.error + 4.0 * kEps * std::abs(pole)};
  }
  // Left half-plane: the partial sums cancel badly, so use Hurwitz's formula
  //   zeta(1-w, a) = Gamma(w) (2 pi)^(-w) [e^(-i pi w/2) Li_w(e^(2 pi i a)) + e^(i pi w/2) Li_w(e^(-2 pi i a))]
  // with w = 1 - s, Re(w) > 1, after reducing a to (0, 1].
  const double frac = a - std::ceil(a) + 1.0;  // in (0, 1]
  const long shift = std::lround(a - frac);
  const cplx w = 1.0 - s;
  const cplx zp = std::polar(1.0, 2.0 * std::numbers::pi * frac);
  const cplx rot = std::exp(cplx(0.0, -0.5 * std::numbers::pi) * w);
  const Estimate lp = polylog(w, zp, cfg);
  const Estimate lm = polylog(w, std::conj(zp), cfg);
  const cplx pref = numerics::gamma(w) * std::exp(-w * std::log(2.0 * std::numbers::pi));
  cplx value = pref * (rot * lp.value + lm.value / rot);
  double err = std::abs(pref) * (std::abs(rot) * lp.error + lm.error / std::abs(rot));
  for (long k = 0; k < shift; ++k) value -= numerics::pow_neg(static_cast<double>(k) + frac, s);
  return {value, err + 4.0 * kEps * std::abs(value)};
}

namespace {

// Coefficients of G(x) = (H(a,x) - H(a,0)) / x = sum_{k>=0} c_k x^k,
// c_k = B_{k+2}(1-a) / (k+2)!. Radius 2 pi.
std::vector<double> g_taylor(double a, int terms) {
  const auto& bern = numerics::BernoulliTable::standard();
  std::vector<double> c(terms);
  double fact = 1.0;
  for (int k = 0; k < terms; ++k) {
    fact *= k + 2;
    c[k] = bern.poly(k + 2, 1.0 - a) / fact;
  }
  return c;
}

template <class T>
T horner(const std::vector<double>& c, T x) {
  T acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Strip integral along the ray x = r e^(i phi) of ray_angle(t). H(a,x) has
// its poles at 2 pi i k, so the ray and the real axis give the same value.
Estimate hurwitz_integral_rotated(cplx s, double a, const EvalConfig& cfg) {
  const double sigma = s.real();
  const double t = s.imag();
  const cplx w = std::polar(1.0, detail::ray_angle(t));
  const double h0 = 0.5 - a;
  const std::vector<double> c = g_taylor(a, 24);
  auto g = [&](cplx x) -> cplx {
    if (std::abs(x) < 0.5) return horner(c, x);
    return (std::exp(-a * x) / -numerics::expm1(-x) - 1.0 / x - h0) / x;
  };
  auto head_f = [&](double r) -> cplx { return detail::pow_imag(r, t) * g(r * w); };
  auto tail_f = [&](double r) -> cplx {
    const cplx x = r * w;
    return detail::pow_imag(r, t) * (std::exp(-a * x) / -numerics::expm1(-x));
  };
  const auto q = detail::quadrature_for(cfg, sigma);
  const auto head = numerics::integrate_unit<cplx>(head_f, q);
  const auto tail = numerics::integrate_tail<cplx>(tail_f, q.with_exponent(sigma - 1.0));
  const cplx ws = std::exp(s * cplx(0.0, std::arg(w)));
  const cplx total = ws * (h0 / s + w * head.value + tail.value) - ws / w / (1.0 - s);
  const cplx gs = numerics::gamma(s);
  return {total / gs, std::abs(ws) * (head.error + tail.error) / std::abs(gs)};
}

}  // namespace

// zeta(s,a) Gamma(s) = H(a,0)/s + int_0^1 x^s G(x) dx
//                    + int_1^inf x^(s-1) e^(-ax)/(1-e^(-x)) dx - 1/(1-s)
Estimate hurwitz_integral(cplx s, double a, const EvalConfig& cfg) {
  const double sigma = s.real();
  const double t = s.imag();
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("hurwitz_integral: needs 0 < Re(s) < 1, got s = " + fmt(s));
  }
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_integral: needs 0 < a <= 1");
  if (std::abs(t) > 1.0) return hurwitz_integral_rotated(s, a, cfg);
  const kernel::KernelParams kp{a};
  const double h0 = 0.5 - a;
  const std::vector<double> c = g_taylor(a, 14);
  std::vector<double> h;
  auto head_f = [&](std::span<const double> x, std::span<cplx> out) {
    h.resize(x.size());
    kernel::h_kernel_batch(kp, x, h);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double gx = x[i] < 0.25 ? horner(c, x[i]) : (h[i] - h0) / x[i];
      out[i] = detail::pow_imag(x[i], t) * gx;
    }
  };
  const auto q = detail::quadrature_for(cfg, sigma);
  const auto head = numerics::integrate_unit<cplx>(head_f, q);

  std::vector<double> ex;
  std::vector<double> em;
  std::vector<double> neg;
  auto tail_f = [&](std::span<const double> x, std::span<cplx> out) {
    neg.resize(x.size());
    ex.resize(x.size());
    em.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -a * x[i];
    simd::exp_batch(neg, ex);
    for (std::size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
    simd::expm1_batch(neg, em);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = detail::pow_imag(x[i], t) * (ex[i] / -em[i]);
  };
  const auto tail = numerics::integrate_tail<cplx>(tail_f, q.with_exponent(sigma - 1.0));

  const cplx gs = numerics::gamma(s);
  const cplx total = h0 / s + head.value + tail.value - 1.0 / (1.0 - s);
  return {total / gs, (head.error + tail.error) / std::abs(gs)};
}

const char* method_name(HurwitzMethod m) {
  switch (m) {
    case HurwitzMethod::Automatic:
      return "auto";
    case HurwitzMethod::Series:
      return "series";
    case HurwitzMethod::EulerMaclaurin:
      return "euler-maclaurin";
    case HurwitzMethod::IntegralStrip:
      return "integral-strip";
  }
  return "unknown";
}

HurwitzMethod resolve_method(HurwitzMethod m, cplx s, double a) {
  if (m != HurwitzMethod::Automatic) return m;
  const double sigma = s.real();
  if (sigma > 1.0) return HurwitzMethod::Series;
  if (sigma > 0.0 && sigma < 1.0 && a > 0.0 && a <= 1.0) return HurwitzMethod::IntegralStrip;
  return HurwitzMethod::EulerMaclaurin;
}

Estimate hurwitz(cplx s, double a, HurwitzMethod m, const EvalConfig& cfg) {
  switch (resolve_method(m, s, a)) {
    case HurwitzMethod::Series:
      return hurwitz_series(s, a, cfg);
    case HurwitzMethod::IntegralStrip:
      return hurwitz_integral(s, a, cfg);
    default:
      return hurwitz_euler_maclaurin(s, a, -1, cfg);
  }
}

}  // namespace lerchzeta
