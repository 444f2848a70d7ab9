#pragma once

#include "lerchzeta/types.hpp"

namespace lerchzeta {

/// A single-variable evaluation request. The public boundary restricts the
/// shift to (0,1] and the twist to the closed unit disc minus the origin;
/// the evaluator functions themselves accept any positive real shift.
struct EvalPoint {
  cplx s{};
  double a = 1.0;
  cplx z = 1.0;

  void validate() const;
  bool z_is_one() const;
};

/// |z - 1| below this is treated as z = 1.
inline constexpr double kUnitTwistTol = 1e-8;

}  // namespace lerchzeta
