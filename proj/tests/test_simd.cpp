#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lerchzeta/simd/kernels.hpp"

using namespace lerchzeta::simd;

namespace {

std::vector<double> sample(double lo, double hi, std::size_t n, bool log_scale, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) {
    x = log_scale ? std::exp(std::log(lo) + u(rng) * (std::log(hi) - std::log(lo))) : lo + u(rng) * (hi - lo);
  }
  return v;
}

double max_rel(const std::vector<double>& a, const std::vector<double>& b, double floor = 0.0) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]) / std::max(std::abs(b[i]), floor);
    m = std::max(m, d);
  }
  return m;
}

}  // namespace

TEST_CASE("scalar table always available") {
  CHECK(isa_supported(Isa::Scalar));
  CHECK(table(Isa::Scalar).isa == Isa::Scalar);
  MESSAGE("active kernels: " << std::string(active().name));
}

TEST_CASE("avx2 kernels match the scalar reference") {
  if (!isa_supported(Isa::Avx2)) {
    MESSAGE("AVX2 not available; equivalence test skipped");
    return;
  }
  const KernelTable& ref = table(Isa::Scalar);
  const KernelTable& vec = table(Isa::Avx2);
  // sizes not divisible by 4 exercise the padded remainder path
  for (std::size_t n : {1u, 3u, 4u, 1023u}) {
    auto x = sample(-700.0, 700.0, n, false, 1u + n);
    std::vector<double> a(n), b(n);
    ref.exp(x.data(), a.data(), n);
    vec.exp(x.data(), b.data(), n);
    CHECK(max_rel(b, a) < 4e-16);

    auto small = sample(-3.0, 3.0, n, false, 2u + n);
    ref.expm1(small.data(), a.data(), n);
    vec.expm1(small.data(), b.data(), n);
    CHECK(max_rel(b, a) < 4e-16);

    auto pos = sample(1e-300, 1e300, n, true, 3u + n);
    ref.log(pos.data(), a.data(), n);
    vec.log(pos.data(), b.data(), n);
    CHECK(max_rel(b, a, 1.0) < 4e-16);

    auto base = sample(1e-8, 1e8, n, true, 4u + n);
    ref.pow(base.data(), -1.37, a.data(), n);
    vec.pow(base.data(), -1.37, b.data(), n);
    CHECK(max_rel(b, a) < 1e-14);

    auto hx = sample(1e-3, 80.0, n, true, 5u + n);
    for (double a_shift : {0.05, 0.5, 1.0}) {
      ref.h_direct(a_shift, hx.data(), a.data(), n);
      vec.h_direct(a_shift, hx.data(), b.data(), n);
      // H is a difference of terms of size 1/x; compare on that scale
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(b[i] - a[i]) <= 4e-16 * (1.0 + 1.0 / hx[i]));
    }
  }
  for (double sigma : {1.1, 2.0, 0.3}) {
    for (std::size_t count : {0u, 1u, 7u, 4096u}) {
      const double r = ref.power_sum(0.37, count, sigma);
      const double v = vec.power_sum(0.37, count, sigma);
      CHECK(std::abs(r - v) <= 1e-14 * std::max(1.0, std::abs(r)));
    }
  }
}

TEST_CASE("special inputs") {
  const KernelTable& k = active();
  const double xs[] = {0.0, 1.0, -1e-300, 5e-324, 2.5e-310};
  double out[5];
  k.exp(xs, out, 3);
  CHECK(out[0] == 1.0);
  CHECK(out[1] == doctest::Approx(std::exp(1.0)).epsilon(1e-16));
  k.log(xs + 1, out, 4);
  CHECK(out[0] == 0.0);
  CHECK(out[2] == doctest::Approx(std::log(5e-324)).epsilon(1e-15));
  CHECK(out[3] == doctest::Approx(std::log(2.5e-310)).epsilon(1e-15));
  const double big[] = {800.0, -800.0};
  k.exp(big, out, 2);
  CHECK(std::isinf(out[0]));
  CHECK(out[1] == 0.0);
}
