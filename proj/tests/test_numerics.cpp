#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lerchzeta/errors.hpp"
#include "lerchzeta/numerics/bernoulli.hpp"
#include "lerchzeta/numerics/complex_math.hpp"
#include "lerchzeta/numerics/gamma.hpp"
#include "lerchzeta/numerics/gauss_legendre.hpp"
#include "lerchzeta/numerics/quadrature.hpp"

using namespace lerchzeta;
using namespace lerchzeta::numerics;

namespace {
double rel_err(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("gamma at integers and half-integers") {
  CHECK(std::abs(gamma(cplx(1.0)) - 1.0) < 1e-14);
  CHECK(std::abs(gamma(cplx(5.0)) - 24.0) < 1e-12);
  // Γ(1/2)² = π/sin(π/2)
  const cplx half = gamma(cplx(0.5));
  CHECK(rel_err(half * half, std::numbers::pi) < 1e-14);
  CHECK(rel_err(half, 1.77245385090551602729816748334) < 1e-14);
}

TEST_CASE("gamma against frozen high-precision values") {
  CHECK(rel_err(gamma(cplx(3.5, -2.25)), cplx(-1.35966733282763127206, -0.70874813693394842789)) < 1e-13);
  CHECK(rel_err(gamma(cplx(-4.3, 1.7)), cplx(0.00104200276773415984, 0.000200769625158744420)) < 1e-12);
  CHECK(rel_err(gamma(cplx(40.5)), 1.28605024825499153583871394876e+47) < 1e-12);
  CHECK(rel_err(gamma(cplx(0.2, 30.0)), cplx(-2.38103208370568306853e-21, 1.97341032060164937200e-21)) < 1e-12);
}

TEST_CASE("gamma poles") {
  CHECK_THROWS_AS(gamma(cplx(0.0)), PoleError);
  CHECK_THROWS_AS(gamma(cplx(-3.0)), PoleError);
  CHECK_NOTHROW(gamma(cplx(-3.0, 1e-9)));
}

TEST_CASE("gamma recurrence on random points") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> mod(0.1, 20.0);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  for (int i = 0; i < 100; ++i) {
    const cplx s = std::polar(mod(rng), ang(rng));
    if (s.real() < 0 && std::abs(s.imag()) < 1e-3) continue;
    CHECK(rel_err(gamma(s + 1.0), s * gamma(s)) < 1e-12);
  }
}

TEST_CASE("reflection product") {
  CHECK(rel_err(gamma_reflection_product(cplx(0.5)), std::numbers::pi) < 1e-15);
  CHECK(rel_err(gamma_reflection_product(cplx(0.25)), std::numbers::pi * std::numbers::sqrt2) < 1e-14);
  CHECK(rel_err(gamma_reflection_product(cplx(0.9)), gamma(cplx(0.9)) * gamma(cplx(0.1))) < 1e-12);
  CHECK(rel_err(gamma_reflection_product(cplx(0.9)), 10.166407384630518872938572465) < 1e-13);
  CHECK_THROWS_AS(gamma_reflection_product(cplx(2.0)), PoleError);
}

TEST_CASE("bernoulli numbers and polynomials") {
  const auto& tab = BernoulliTable::standard();
  CHECK(tab.number(0) == 1.0);
  CHECK(tab.number(1) == -0.5);
  CHECK(tab.number(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  for (int l = 3; l <= tab.degree(); l += 2) CHECK(tab.number(l) == 0.0);
  // B_20 = -174611/330, B_40 from the exact fraction
  CHECK(tab.number(20) == doctest::Approx(-174611.0 / 330.0).epsilon(1e-14));
  CHECK(tab.number(40) == doctest::Approx(-261082718496449122051.0 / 13530.0).epsilon(1e-14));

  CHECK(bernoulli_poly(0, 0.37) == 1.0);
  CHECK(bernoulli_poly(1, 0.25) == doctest::Approx(-0.25));
  CHECK(bernoulli_poly(2, 0.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(bernoulli_poly(3, 0.3) == doctest::Approx(0.3 * 0.3 * 0.3 - 1.5 * 0.09 + 0.5 * 0.3));
  CHECK_THROWS_AS(bernoulli_poly(tab.degree() + 1, 0.5), DegreeOverflow);
}

TEST_CASE("bernoulli recurrence regenerates the table") {
  // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
  const auto& tab = BernoulliTable::standard();
  for (int m = 1; m <= 64; ++m) {
    long double acc = 0.0L;
    long double scale = 0.0L;
    long double binom = 1.0L;
    for (int k = 0; k <= m; ++k) {
      const long double term = binom * tab.number(k);
      acc += term;
      scale += std::fabs(term);
      binom = binom * (m + 1 - k) / (k + 1);
    }
    CHECK(static_cast<double>(std::fabs(acc) / scale) < 1e-14);
  }
}

TEST_CASE("periodic bernoulli") {
  CHECK(periodic_bernoulli(1, 2.75) == doctest::Approx(0.25));
  CHECK(periodic_bernoulli(2, 7.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(periodic_bernoulli(1, 0.5) == 0.0);
  for (int l = 1; l <= 6; ++l) {
    for (double x : {0.1, 0.45, 0.8, 3.3}) {
      CHECK(std::abs(periodic_bernoulli(l, x + 1.0) - periodic_bernoulli(l, x)) < 1e-14);
    }
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(cplx(0.7, 2.0), 0) == cplx(1.0));
  CHECK(std::abs(pochhammer(cplx(2.0), 3) - 24.0) < 1e-14);
  CHECK(std::abs(pochhammer(cplx(0.5), 2) - 0.75) < 1e-15);
  CHECK(std::abs(pochhammer(cplx(0.0), 1)) == 0.0);
}

TEST_CASE("complex helpers") {
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(cos_pi(2.5) == 0.0);
  const cplx z(1e-9, 2e-9);
  CHECK(std::abs(numerics::expm1(z) - (z + z * z / 2.0)) < 1e-24);
  CHECK(std::abs(exprel(cplx(0.0)) - 1.0) == 0.0);
  CHECK(std::abs(exprel(cplx(1.0)) - (std::exp(1.0) - 1.0)) < 1e-15);
}

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  for (int n : {1, 5, 16, 20, 64}) {
    const auto& rule = gauss_legendre(n);
    double wsum = 0.0;
    double m2 = 0.0;
    double top = 0.0;
    for (int i = 0; i < n; ++i) {
      wsum += rule.weights[i];
      m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
      top += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    if (n >= 2) CHECK(m2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(top == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
}

TEST_CASE("semi-infinite quadrature examples") {
  Quadrature q;
  q.abs_tol = 1e-10;
  q.rel_tol = 1e-10;
  const auto r1 = integrate_semi_infinite([](double x) { return std::exp(-x); }, q);
  CHECK(std::abs(r1.value - 1.0) < 1e-12);
  CHECK(r1.error <= 1e-10);

  q.singularity_exponent = -0.5;
  const auto r2 = integrate_semi_infinite([](double x) { return std::exp(-x); }, q);
  CHECK(std::abs(r2.value - 1.77245385090551602729816748334) < 1e-12);

  // x^(1/2) e^(-x) / (e^x - 1) = sum_k x^(1/2) e^(-(k+1)x)
  q.singularity_exponent = 0.5;
  const auto r3 = integrate_semi_infinite([](double x) { return std::exp(-x) / std::expm1(x); }, q);
  CHECK(std::abs(r3.value - 1.42893044794135898677673572745) < 1e-9);
}

TEST_CASE("quadrature reproduces gamma on a grid of exponents") {
  Quadrature q;
  q.abs_tol = 1e-13;
  q.rel_tol = 1e-12;
  for (int k = 1; k <= 30; ++k) {
    const double sigma = 0.1 * k;
    q.singularity_exponent = sigma - 1.0;
    const auto r = integrate_semi_infinite([](double x) { return std::exp(-x); }, q);
    CHECK(rel_err(r.value, gamma(cplx(sigma)).real()) < 1e-11);
  }
}

TEST_CASE("batched and complex integrands") {
  Quadrature q;
  auto batch = [](std::span<const double> x, std::span<cplx> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::exp(cplx(-1.0, 1.0) * x[i]);
  };
  const auto r = integrate_semi_infinite<cplx>(batch, q);
  CHECK(std::abs(r.value - 1.0 / cplx(1.0, -1.0)) < 1e-12);
}

TEST_CASE("finite interval and refinement monotonicity") {
  Quadrature q;
  const auto r = integrate_interval([](double x) { return std::cos(x); }, 0.0, 2.0, q);
  CHECK(std::abs(r.value - std::sin(2.0)) < 1e-13);

  Quadrature lo = q;
  lo.max_depth = 6;
  Quadrature hi = q;
  hi.max_depth = 12;
  auto f = [](double x) { return std::exp(-x) * std::cos(x); };
  CHECK(integrate_semi_infinite(f, hi).error <= integrate_semi_infinite(f, lo).error);
}

TEST_CASE("quadrature errors") {
  Quadrature q;
  q.singularity_exponent = -1.0;
  CHECK_THROWS_AS(integrate_unit([](double) { return 1.0; }, q), DomainError);
  Quadrature tight;
  tight.abs_tol = 1e-30;
  tight.rel_tol = 0.0;
  tight.max_depth = 3;
  // |sin(1/x)| oscillates without limit near 0: no convergence at depth 3
  CHECK_THROWS_AS(integrate_unit([](double x) { return std::sin(1.0 / x); }, tight), NonConvergence);
}

TEST_CASE("double semi-infinite quadrature") {
  Quadrature q;
  q.abs_tol = 1e-11;
  q.rel_tol = 1e-11;
  const auto r1 = integrate_double_semi_infinite([](double x, double y) { return std::exp(-x - y); }, q, 0.0, 0.0);
  CHECK(std::abs(r1.value - 1.0) < 1e-10);
  const auto r2 = integrate_double_semi_infinite([](double x, double y) { return std::exp(-x - y); }, q, -0.5, -0.5);
  CHECK(std::abs(r2.value - std::numbers::pi) < 1e-9);
  // double zeta kernel at s1=s2=2, a=1: y/(e^y-1) * x/(e^(x+y)-1) integrates
  // to Γ(2)² ζ₂(2,2;1); y/(e^y-1) is regular, so alpha_y = 0
  const auto r3 = integrate_double_semi_infinite(
      [](double x, double y) { return y / std::expm1(y) / std::expm1(x + y); }, q, 1.0, 0.0);
  CHECK(std::abs(r3.value - 0.8117424252833536) < 1e-8);
}
