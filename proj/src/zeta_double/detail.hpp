#pragma once

#include "lerchzeta/types.hpp"

namespace lerchzeta::detail {

/// Phi2 with an arbitrary positive shift in integral form; the caller has
/// checked the case conditions.
Estimate phi2_integral(cplx s1, cplx s2, double shift, cplx z1, cplx z2, bool z1_one, bool z2_one,
                       const EvalConfig& cfg);

inline constexpr double kUnitTol = 1e-8;  // |z - 1| below this counts as z = 1

}  // namespace lerchzeta::detail
