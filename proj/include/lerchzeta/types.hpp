#pragma once

#include <complex>

namespace lerchzeta {

using cplx = std::complex<double>;

/// A computed value together with an estimate of its absolute error.
struct Estimate {
  cplx value{};
  double error = 0.0;
};

/// Precision budget shared by the evaluators.
struct EvalConfig {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  int max_depth = 10;  // quadrature refinement cap (halvings of the step)
};

}  // namespace lerchzeta
