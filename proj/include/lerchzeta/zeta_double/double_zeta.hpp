#pragma once

#include "lerchzeta/types.hpp"

namespace lerchzeta {

enum class DoubleRegion {
  SeriesAbs,    // absolutely convergent double series
  Strip1,       // z1 = z2 = 1, 0 < sigma1 < 1, sigma2 > 1, 1 < sigma1 + sigma2 < 2
  Case2,        // z1 = 1, z2 != 1: sigma1 > 1, sigma2 > 0
  Case3,        // z1 != 1, z2 = 1: sigma1 > 0, sigma2 > 1
  Case4,        // z1, z2 != 1: sigma1, sigma2 > 0
  AiContinued,  // z1 = z2 = 1 elsewhere, reached only by the continuation formula
  Outside,
};

const char* region_name(DoubleRegion r);

/// Phi2(s1,s2,a,z1,z2) = sum_{m>=0} z1^m (m+a)^(-s1) sum_{n>=1} z2^(n-1) (m+n+a)^(-s2).
/// zeta2(s1,s2;a) is the case z1 = z2 = 1.
struct DoublePoint {
  cplx s1 = 2.0;
  cplx s2 = 2.0;
  double a = 1.0;
  cplx z1 = 1.0;
  cplx z2 = 1.0;

  /// a in (0, 1], 0 < |z| <= 1.
  void validate() const;
  bool z1_is_one() const;
  bool z2_is_one() const;
  DoubleRegion region() const;
};

struct AiRemainderSpec {
  int l = -1;               // truncation order; -1 picks 1 in the strip and 0 elsewhere
  long inner_terms = 100000;  // cap on explicitly summed remainder terms
};

/// Partial sum over m < 64 with inner Lerch sums by backward recurrence,
/// completed by z1^64 Phi2(s1, s2, a+64, z1, z2) in integral form.
/// Domain: sigma1 > 0, sigma2 > 1, sigma1 + sigma2 > 2 when z1 = z2 = 1,
/// sigma1, sigma2 > 1 otherwise. Inside the strip the series is not
/// absolutely convergent and the call is refused.
Estimate double_series(const DoublePoint& p, const EvalConfig& cfg = {});

/// (1/(Gamma(s1) Gamma(s2))) int int y^(s2-1)/(e^y - z2) x^(s1-1) e^((1-a)(x+y))/(e^(x+y) - z1) dx dy
/// on the four z-cases (see DoubleRegion).
Estimate double_integral(const DoublePoint& p, const EvalConfig& cfg = {});

enum class StripForm {
  Reflection,  // second term as Gamma(s1) Gamma(1-s1) int H(1,y) y^(s1+s2-2) dy
  Starred,     // second term kept as int int x^(s1-1)/(x+y) H(1,y) y^(s2-1) dx dy
};

/// zeta2 on the strip through the kernel H (z1 = z2 = 1).
Estimate double_strip(const DoublePoint& p, StripForm form = StripForm::Starred, const EvalConfig& cfg = {});

/// Continuation of zeta2 through Hurwitz zeta values and Bernoulli
/// corrections:
///   a^(-s1) (zeta(s2,a) - a^(-s2)) + (zeta(s1+s2-1,a) - a^(1-s1-s2))/(s2-1)
///   + sum_{r=0}^{l} B_{r+1}/(r+1)! (s2)_r (zeta(s1+s2+r,a) - a^(-s1-s2-r))
///   - sum_{n>=1} Phi_l(s2|n,a) (n+a)^(-s1).
/// Needs Re(s1+s2) > -l. Refuses |s2-1| < 1e-6 and s1+s2 within 1e-6 of
/// 2, 1, 0, ..., 1-l.
Estimate ai_continuation(const DoublePoint& p, AiRemainderSpec spec = {}, const EvalConfig& cfg = {});

/// Phi_l(s|lambda,a) = ((s)_{l+1}/(l+1)!) int_lambda^inf B~_{l+1}(x) (x+a)^(-s-l-1) dx,
/// Gauss-Legendre on unit periods, then the integration-by-parts expansion
/// once the periods are far enough out. Needs Re(s) > -l.
Estimate phi_l_remainder(cplx s, double lambda, double a, int l, const EvalConfig& cfg = {});

/// zeta2(s,s;a) = (zeta(s,a)^2 - zeta(2s,a))/2 for Re(s) > 1/2.
Estimate diagonal_identity(cplx s, double a, const EvalConfig& cfg = {});

/// |zeta(s1,a) zeta(s2,a) - zeta2(s1,s2;a) - zeta2(s2,s1;a) - zeta(s1+s2,a)|
/// with every term evaluated on its own (Re(s1), Re(s2) > 1).
double harmonic_product_check(cplx s1, cplx s2, double a, const EvalConfig& cfg = {});

enum class TwistClaim {
  ImaginaryNonzero,  // sin(2 pi theta1) sin(2 pi theta2) > 0
  RealPositive,      // sin(2 pi theta1) sin(2 pi theta2) < 0
};

/// Sign structure of Phi2 for non-real z1, z2 (conj z_k = r_k e^(2 pi i theta_k)).
struct TwistSignEvidence {
  TwistClaim claim = TwistClaim::RealPositive;
  double sin_product = 0.0;
  int predicted_im_sign = 0;  // sign(Im z1) under ImaginaryNonzero, else 0
  cplx value;
  double error = 0.0;
  bool holds = false;
};

/// Evaluates Phi2 by the double integral at real sigma1, sigma2 > 0 and
/// checks the claim the sine product predicts.
TwistSignEvidence complex_twist_sign_parts(const DoublePoint& p, const EvalConfig& cfg = {});

/// Automatic choice by region: series, integral, or the continuation formula
/// (also on the strip, where it stays accurate up to s1 + s2 -> 2).
Estimate double_zeta(const DoublePoint& p, const EvalConfig& cfg = {});

}  // namespace lerchzeta
