#pragma once

#include "lerchzeta/types.hpp"

namespace lerchzeta {

/// zeta(s,a) = sum_{n>=0} (n+a)^(-s) for Re(s) > 1. Plain truncation when
/// the tail bound (N+a)^(1-sigma)/(sigma-1) meets the tolerance with at most
/// 4096 terms; otherwise a short partial sum plus the Mellin integral of the
/// tail zeta(s, N+a).
Estimate hurwitz_series(cplx s, double a, const EvalConfig& cfg = {});

/// Euler-Maclaurin form for Re(s) > 0, s != 1:
///   sum_{n=0}^{N} (n+a)^(-s) + (N+a)^(1-s)/(s-1) - s int_N^inf (x-[x]) (x+a)^(-s-1) dx
/// with the integral taken over unit periods up to K = max(N, 10 + ceil|s|)
/// (exact primitive below k+a < 2, 20-point Gauss-Legendre otherwise) and
/// the Bernoulli asymptotic series beyond K. N < 0 selects max(10, ceil|s|).
Estimate hurwitz_euler_maclaurin(cplx s, double a, int N = -1, const EvalConfig& cfg = {});

/// zeta(s,a) - 1/(s-1), analytic at s = 1. Same algorithm as above with the
/// pole term cancelled in closed form. Requires Re(s) > 0.
Estimate hurwitz_regularized(cplx s, double a, int N = -1, const EvalConfig& cfg = {});

/// The Euler-Maclaurin evaluator without the Re(s) > 0 restriction
/// (the period sum is finite, so the formula continues to Re(s) > -20).
Estimate hurwitz_continued(cplx s, double a, const EvalConfig& cfg = {});

/// (1/Gamma(s)) int_0^inf H(a,x) x^(s-1) dx on 0 < Re(s) < 1, split at 1:
///   int_0^1 H x^(s-1) + int_1^inf x^(s-1) e^((1-a)x)/(e^x-1) - 1/(1-s).
/// Requires 0 < a <= 1.
Estimate hurwitz_integral(cplx s, double a, const EvalConfig& cfg = {});

enum class HurwitzMethod { Automatic, Series, EulerMaclaurin, IntegralStrip };

const char* method_name(HurwitzMethod m);

/// Resolves Automatic: series for Re(s) > 1, the strip integral for
/// 0 < Re(s) < 1 and a <= 1, Euler-Maclaurin otherwise (Re(s) > 0, s != 1).
HurwitzMethod resolve_method(HurwitzMethod m, cplx s, double a);

Estimate hurwitz(cplx s, double a, HurwitzMethod m = HurwitzMethod::Automatic, const EvalConfig& cfg = {});

}  // namespace lerchzeta
