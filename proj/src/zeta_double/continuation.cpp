#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "lerchzeta/errors.hpp"
#include "lerchzeta/numerics/bernoulli.hpp"
#include "lerchzeta/numerics/complex_math.hpp"
#include "lerchzeta/numerics/gauss_legendre.hpp"
#include "lerchzeta/zeta_double/double_zeta.hpp"
#include "lerchzeta/zeta_single/hurwitz.hpp"

namespace lerchzeta {
namespace {

constexpr int kPeriodPoints = 20;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPoleGap = 1e-6;

// zeta(s, b) for any shift b > 0 away from s = 1
Estimate hurwitz_any(cplx s, double b, const EvalConfig& cfg) {
  if (s.real() > 0.0) return hurwitz_euler_maclaurin(s, b, -1, cfg);
  return hurwitz_continued(s, b, cfg);
}

// int_0^1 B_p(u) (k+u+a)^(-w) du on a whole period, or on [lo, 1] of it
cplx period_integral(int p, cplx w, double k, double a, double lo = 0.0, int points = kPeriodPoints) {
  const auto& rule = numerics::gauss_legendre(points);
  const auto& bern = numerics::BernoulliTable::standard();
  const double half = 0.5 * (1.0 - lo);
  const double mid = 0.5 * (1.0 + lo);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = mid + half * rule.nodes[i];
    acc += rule.weights[i] * bern.poly(p, u) * numerics::pow_neg(k + u + a, w);
  }
  return half * acc;
}

// int_K^inf B~_p(x) (x+a)^(-w) dx = sum_j d_j (K+a)^(-w-j) at integer K by
// repeated integration by parts, d_j = -B_{p+1+j} (w)_j p!/(p+1+j)!.
struct Expansion {
  std::vector<cplx> coeffs;  // d_j
  double error = 0.0;        // |first omitted term| at the anchor, relative scale
};

Expansion ibp_expansion(int p, cplx w, double anchor_base) {
  const auto& bern = numerics::BernoulliTable::standard();
  Expansion e;
  cplx poch = 1.0;        // (w)_j
  double fact_ratio = 1.0 / (p + 1);  // p!/(p+1+j)!
  double first = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int j = 0; p + 1 + j <= bern.degree(); ++j) {
    const cplx d = -bern.number(p + 1 + j) * poch * fact_ratio;
    const double size = std::abs(d) * std::pow(anchor_base, -static_cast<double>(j));
    if (d != cplx(0.0)) {
      if (first == 0.0) first = size;
      if (size > prev) {  // asymptotic series turning
        e.error = size;
        break;
      }
      prev = size;
      if (size < 1e-18 * first) {
        e.coeffs.push_back(d);
        e.error = size;
        break;
      }
    }
    e.coeffs.push_back(d);
    poch *= w + static_cast<double>(j);
    fact_ratio /= (p + 2 + j);
  }
  return e;
}

cplx eval_expansion(const Expansion& e, cplx w, double base) {
  cplx acc = 0.0;
  for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
    if (e.coeffs[j] == cplx(0.0)) continue;
    acc += e.coeffs[j] * numerics::pow_neg(base, w + static_cast<double>(j));
  }
  return acc;
}

long anchor_for(cplx w, cplx extra = 0.0) {
  return static_cast<long>(std::ceil(32.0 + std::abs(w) + std::abs(extra)));
}

void check_order(cplx s, int l, const char* who) {
  if (l < 0) throw DomainError(std::string(who) + ": order l must be >= 0");
  if (l + 2 > numerics::BernoulliTable::standard().degree()) throw DegreeOverflow(std::string(who) + ": order l too large");
  if (!(s.real() > -l)) throw DomainError(std::string(who) + ": needs Re(s) > -l");
}

}  // namespace

Estimate phi_l_remainder(cplx s, double lambda, double a, int l, const EvalConfig& cfg) {
  (void)cfg;
  if (!(lambda > 0.0) || !(a > 0.0)) throw DomainError("phi_l_remainder: needs lambda > 0 and a > 0");
  const int p = l + 1;
  const cplx w = s + static_cast<double>(p);
  const cplx pref = numerics::pochhammer(s, p) / std::tgamma(static_cast<double>(p + 1));
  if (l >= 0 && pref == cplx(0.0)) return {0.0, 0.0};
  check_order(s, l, "phi_l_remainder");

  const double first = std::ceil(lambda);
  cplx acc = 0.0;
  double mass = 0.0;
  if (first > lambda) {
    // partial period [lambda, first] of B~_p(x) = B_p(x - floor(x))
    const double k = first - 1.0;
    const cplx part = period_integral(p, w, k, a, lambda - k, numerics::kMaxGaussPoints);
    acc += part;
    mass += std::abs(part);
  }
  const long anchor = std::max(static_cast<long>(first), anchor_for(w));
  for (long k = static_cast<long>(first); k < anchor; ++k) {
    const cplx v = period_integral(p, w, static_cast<double>(k), a);
    acc += v;
    mass += std::abs(v);
  }
  const double base = anchor + a;
  const Expansion e = ibp_expansion(p, w, base);
  acc += eval_expansion(e, w, base);
  const double scale = std::abs(numerics::pow_neg(base, w));
  return {pref * acc, std::abs(pref) * (e.error * scale + 8.0 * kEps * mass)};
}

Estimate ai_continuation(const DoublePoint& p, AiRemainderSpec spec, const EvalConfig& cfg) {
  p.validate();
  if (!p.z1_is_one() || !p.z2_is_one()) throw DomainError("ai_continuation: needs z1 = z2 = 1");
  const int l = spec.l >= 0 ? spec.l : (p.region() == DoubleRegion::Strip1 ? 1 : 0);
  const cplx s1 = p.s1;
  const cplx s2 = p.s2;
  const cplx S = s1 + s2;
  const double a = p.a;
  check_order(S, l, "ai_continuation");
  if (std::abs(s2 - 1.0) < kPoleGap) throw PoleError("ai_continuation: s2 = 1 is a singular hyperplane");
  for (int k = 2; k >= 1 - l; --k) {
    if (std::abs(S - static_cast<double>(k)) < kPoleGap) {
      throw PoleError("ai_continuation: s1 + s2 = " + std::to_string(k) + " is a singular hyperplane");
    }
  }

  // zeta(x, a) - a^(-x) = zeta(x, a+1)
  const Estimate z_s2 = hurwitz_any(s2, a + 1.0, cfg);
  const cplx t1 = numerics::pow_neg(a, s1) * z_s2.value;
  double err = std::abs(numerics::pow_neg(a, s1)) * z_s2.error;

  const Estimate z_s1 = hurwitz_any(S - 1.0, a + 1.0, cfg);
  const cplx t2 = z_s1.value / (s2 - 1.0);
  err += z_s1.error / std::abs(s2 - 1.0);

  const auto& bern = numerics::BernoulliTable::standard();
  cplx t3 = 0.0;
  double fact = 1.0;
  for (int r = 0; r <= l; ++r) {
    fact *= (r + 1);
    const double b = bern.number(r + 1);
    if (b == 0.0) continue;
    const cplx c = b / fact * numerics::pochhammer(s2, r);
    const Estimate z = hurwitz_any(S + static_cast<double>(r), a + 1.0, cfg);
    t3 += c * z.value;
    err += std::abs(c) * z.error;
  }

  // sum_{n>=1} Phi_l(s2|n,a) (n+a)^(-s1): backward accumulation over whole
  // periods below the anchor K, the expansion summed in closed form above it
  const int pp = l + 1;
  const cplx w = s2 + static_cast<double>(pp);
  const cplx pref = numerics::pochhammer(s2, pp) / std::tgamma(static_cast<double>(pp + 1));
  cplx t4 = 0.0;
  if (pref != cplx(0.0)) {
    const long K = std::max(2L, anchor_for(w, s1));
    if (K > spec.inner_terms) throw NonConvergence("ai_continuation: remainder anchor exceeds inner_terms cap");
    const double base = K + a;
    const Expansion e = ibp_expansion(pp, w, base);
    cplx phi = eval_expansion(e, w, base);  // unscaled Phi_l(s2|K,a)
    cplx head = 0.0;
    double mass = 0.0;
    for (long n = K - 1; n >= 1; --n) {
      phi += period_integral(pp, w, static_cast<double>(n), a);
      const cplx term = phi * numerics::pow_neg(n + a, s1);
      head += term;
      mass += std::abs(term);
    }
    cplx tail = 0.0;
    for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
      if (e.coeffs[j] == cplx(0.0)) continue;
      const Estimate z = hurwitz_euler_maclaurin(s1 + w + static_cast<double>(j), base, -1, cfg);
      tail += e.coeffs[j] * z.value;
      err += std::abs(pref * e.coeffs[j]) * z.error;
    }
    t4 = pref * (head + tail);
    err += std::abs(pref) * (8.0 * kEps * mass + e.error * std::abs(numerics::pow_neg(base, w)) * K);
  }
  const cplx value = t1 + t2 + t3 - t4;
  err += 8.0 * kEps * (std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4));
  return {value, err};
}

Estimate diagonal_identity(cplx s, double a, const EvalConfig& cfg) {
  if (!(a > 0.0)) throw DomainError("diagonal_identity: needs a > 0");
  if (!(s.real() > 0.5)) throw DomainError("diagonal_identity: needs Re(s) > 1/2");
  if (s == cplx(1.0)) throw PoleError("diagonal_identity: pole at s = 1");
  const Estimate z1 = hurwitz_euler_maclaurin(s, a, -1, cfg);
  const Estimate z2 = hurwitz_euler_maclaurin(2.0 * s, a, -1, cfg);
  const cplx value = 0.5 * (z1.value * z1.value - z2.value);
  return {value, std::abs(z1.value) * z1.error + 0.5 * z2.error + 4.0 * kEps * std::abs(value)};
}

double harmonic_product_check(cplx s1, cplx s2, double a, const EvalConfig& cfg) {
  if (!(s1.real() > 1.0 && s2.real() > 1.0)) throw DomainError("harmonic_product_check: needs Re(s1), Re(s2) > 1");
  const cplx z1 = hurwitz_series(s1, a, cfg).value;
  const cplx z2 = hurwitz_series(s2, a, cfg).value;
  const cplx z12 = hurwitz_series(s1 + s2, a, cfg).value;
  DoublePoint p;
  p.s1 = s1;
  p.s2 = s2;
  p.a = a;
  const cplx d12 = double_series(p, cfg).value;
  std::swap(p.s1, p.s2);
  const cplx d21 = double_series(p, cfg).value;
  return std::abs(z1 * z2 - d12 - d21 - z12);
}

}  // namespace lerchzeta
