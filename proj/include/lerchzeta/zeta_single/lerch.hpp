#pragma once

#include "lerchzeta/types.hpp"

namespace lerchzeta {

/// Phi(s,a,z) = sum_{n>=0} z^n (n+a)^(-s) for z != 1, |z| <= 1.
/// For |z| < 1 (Re(s) > 0) the sum is cut where the geometric bound
/// |z|^N (N+a)^(-sigma) / (1-|z|) meets the tolerance. On |z| = 1 (Re(s) > 1)
/// a partial sum of 64 terms is completed by the integral form of the tail
/// z^64 Phi(s, a+64, z).
Estimate lerch_series(cplx s, double a, cplx z, const EvalConfig& cfg = {});

/// (1/Gamma(s)) int_0^inf x^(s-1) e^((1-a)x) / (e^x - z) dx for Re(s) > 0,
/// z != 1 (|z - 1| < 1e-8 counts as z = 1 and is refused).
Estimate lerch_integral(cplx s, double a, cplx z, const EvalConfig& cfg = {});

/// Series where it converges geometrically or absolutely (|z| < 1, or
/// Re(s) > 1), the integral otherwise.
Estimate lerch(cplx s, double a, cplx z, const EvalConfig& cfg = {});

/// Li_s(z) = z Phi(s,1,z) for 0 < |z| <= 1. z = 1 is accepted only for
/// Re(s) > 1, where it is zeta(s).
Estimate polylog(cplx s, cplx z, const EvalConfig& cfg = {});

}  // namespace lerchzeta
