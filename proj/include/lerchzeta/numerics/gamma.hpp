#pragma once

#include "lerchzeta/types.hpp"

namespace lerchzeta::numerics {

/// Complex gamma function. Lanczos approximation (g = 7, 9 terms) on
/// Re(s) >= 1/2, reflection below. Throws PoleError at 0, -1, -2, ...
cplx gamma(cplx s);

/// Gamma(s) Gamma(1 - s) = pi / sin(pi s). Throws PoleError at integers.
cplx gamma_reflection_product(cplx s);

}  // namespace lerchzeta::numerics
