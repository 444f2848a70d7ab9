#pragma once

#include <span>

namespace lerchzeta::numerics {

/// n-point Gauss-Legendre rule on [-1, 1], 1 <= n <= kMaxPoints.
struct GaussLegendreRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};

inline constexpr int kMaxGaussPoints = 64;

/// Rules are generated once (Newton iteration on P_n) and shared.
const GaussLegendreRule& gauss_legendre(int n);

}  // namespace lerchzeta::numerics
