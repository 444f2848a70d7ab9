#include "lerchzeta/numerics/gauss_legendre.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lerchzeta::numerics {
namespace {

struct RuleStorage {
  std::vector<double> nodes;
  std::vector<double> weights;
  GaussLegendreRule view;
};

RuleStorage build(int n) {
  RuleStorage r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  r.view = {r.nodes, r.weights};
  return r;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static const std::vector<RuleStorage> rules = [] {
    std::vector<RuleStorage> v;
    v.reserve(kMaxGaussPoints + 1);
    v.emplace_back();
    for (int k = 1; k <= kMaxGaussPoints; ++k) v.push_back(build(k));
    for (auto& r : v) r.view = {r.nodes, r.weights};
    return v;
  }();
  if (n < 1 || n > kMaxGaussPoints) throw std::out_of_range("gauss_legendre: unsupported order");
  return rules[n].view;
}

}  // namespace lerchzeta::numerics
