#include <cmath>

#include "doctest.h"
#include "lerchzeta/errors.hpp"
#include "lerchzeta/kernel/kernel.hpp"

using namespace lerchzeta;
using namespace lerchzeta::kernel;

TEST_CASE("H(a,x) against frozen extended-precision values") {
  struct Row {
    double a, x, h;
  };
  const Row rows[] = {
      {0.3, 1e-7, 0.19999999783333327444},     {0.3, 9.99e-4, 0.19997834801444046712},
      {0.3, 1.001e-3, 0.19997830465310982698}, {0.7, 0.02, -0.20043052977490409316},
      {0.05, 3.0, 0.57247203699209487833},     {1.0, 1.0, -0.41802329313067357561},
      {0.5, 10.0, -0.093261747084705456672},   {0.5, 40.0, -0.024999997938846377561},
  };
  for (const auto& r : rows) CHECK(std::abs(h_kernel(r.a, r.x) - r.h) < 1e-12);
}

TEST_CASE("H near zero tends to 1/2 - a") {
  for (double a : {0.1, 0.3, 0.5, 0.8, 1.0}) CHECK(std::abs(h_kernel(a, 1e-12) - (0.5 - a)) < 1e-11);
}

TEST_CASE("signs of H") {
  CHECK(h_kernel(1.0, 1.0) < 0.0);
  CHECK(h_kernel(0.5, 10.0) < 0.0);
  CHECK(h_kernel(0.3, 1e-4) > 0.0);
  CHECK(h_kernel(0.3, 30.0) < 0.0);
  for (double x : {1e-6, 1e-3, 0.1, 1.0, 10.0, 100.0}) CHECK(h_kernel(0.5, x) < 0.0);
}

TEST_CASE("branches agree around the cutoff") {
  KernelParams taylor{0.37};
  taylor.taylor_cutoff = 0.1;
  KernelParams direct{0.37};
  direct.taylor_cutoff = 1e-9;
  for (double x = 5e-4; x <= 2e-3; x += 1e-4) {
    CHECK(std::abs(h_kernel(taylor, x) - h_kernel(direct, x)) < 1e-10);
  }
}

TEST_CASE("H times x(e^x-1) equals the numerator") {
  for (double a : {0.1, 0.5, 0.9, 1.0}) {
    for (double x : {0.01, 0.5, 2.0, 10.0, 30.0}) {
      const double lhs = h_kernel(a, x) * x * std::expm1(x);
      const double rhs = h_numerator(a, x);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("numerator examples") {
  CHECK(h_numerator(0.4, 0.0) == 0.0);
  CHECK(h_numerator(1.0, 1.0) == doctest::Approx(2.0 - std::exp(1.0)).epsilon(1e-15));
  // for a = 0.1 the numerator is still positive at x = 20; it turns negative
  // near x = 35.77
  CHECK(h_numerator(0.1, 20.0) == doctest::Approx(828034188.33681994480).epsilon(1e-13));
  CHECK(h_numerator(0.1, 35.0) > 0.0);
  CHECK(h_numerator(0.1, 36.0) < 0.0);
  CHECK(h_numerator(0.1, 60.0) == doctest::Approx(-97216219161920264963643336.0).epsilon(1e-12));
}

TEST_CASE("batch evaluation matches scalar") {
  const auto grid = log_grid(200);
  std::vector<double> out(grid.size());
  for (double a : {0.05, 0.5, 1.0}) {
    KernelParams p{a};
    h_kernel_batch(p, grid, out);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(std::abs(out[i] - h_kernel(a, grid[i])) <= 1e-15 * (1.0 + 1.0 / grid[i]));
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(h_kernel(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(h_kernel(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(h_kernel(1.5, 1.0), DomainError);
  KernelParams bad{0.5};
  bad.taylor_cutoff = 0.5;
  CHECK_THROWS_AS(h_kernel(bad, 1.0), DomainError);
}

TEST_CASE("negativity certificate") {
  const auto grid = log_grid();
  CHECK(grid.size() == 200);
  CHECK(grid.front() == 1e-6);
  CHECK(grid.back() == 50.0);

  const auto half = negativity_certificate(0.5, grid);
  CHECK(half.verdict == Verdict::NegativeDefiniteEvidence);
  CHECK(half.inequality_holds);

  const auto low = negativity_certificate(0.3, grid);
  CHECK(low.verdict == Verdict::SignChangeFound);
  CHECK(low.x0 == grid.front());

  const double one[] = {1.0};
  CHECK(negativity_certificate(1.0, one).verdict == Verdict::NegativeDefiniteEvidence);

  // a < 1/2 sampled only where H < 0: no evidence either way
  const double far[] = {40.0, 50.0};
  CHECK(negativity_certificate(0.3, far).verdict == Verdict::Inconclusive);

  const double unsorted[] = {2.0, 1.0};
  CHECK_THROWS_AS(negativity_certificate(0.6, unsorted), DomainError);
}
