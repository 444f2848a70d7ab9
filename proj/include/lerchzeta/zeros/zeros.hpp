#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lerchzeta/types.hpp"

namespace lerchzeta {

using RealFunction = std::function<double(double)>;

struct ZeroConfig {
  double zero_tol = 1e-10;    // required |f| at the located zero
  double width_tol = 1e-12;   // bisection stops once the bracket is this narrow
  int max_iterations = 200;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
  bool degenerate = false;  // a sample with |f| < zero_tol; lo == hi
};

struct ZeroRecord {
  std::string context;  // e.g. "hurwitz a=0.25"
  double a = 0.0;
  double location = 0.0;
  double location2 = std::numeric_limits<double>::quiet_NaN();  // second coordinate for double zeta paths
  double lo = 0.0;
  double hi = 0.0;
  double residual = 0.0;
  std::string method;
  int iterations = 0;
  std::string second_method;  // independent re-evaluation, empty when none
  double second_residual = std::numeric_limits<double>::quiet_NaN();
};

/// Sign changes of f between consecutive samples of n_points equally spaced
/// points on [lo, hi]. Evaluation failures are rethrown with the coordinate.
std::vector<Bracket> bracket_scan(const RealFunction& f, double lo, double hi, int n_points,
                                  const ZeroConfig& cfg = {});

/// Same, on caller-supplied sorted points.
std::vector<Bracket> bracket_scan_points(const RealFunction& f, std::span<const double> points,
                                         const ZeroConfig& cfg = {});

/// Bisection on a sign-change bracket down to width_tol. If the residual is
/// still above zero_tol, bisection continues to floating-point resolution;
/// NonConvergence (with the final bracket) if that does not help either.
ZeroRecord refine_zero(const RealFunction& f, const Bracket& b, const ZeroConfig& cfg = {},
                       const std::string& method = "");

/// sigma*(a) in (0,1) for each a < 1/2, with the strip integral as primary
/// evaluator and Euler-Maclaurin as the confirming one. A missing zero is a
/// TheoremContradiction.
std::vector<ZeroRecord> hurwitz_zero_curve(std::span<const double> a_grid, const ZeroConfig& zcfg = {},
                                           const EvalConfig& cfg = {}, int jobs = 1);

/// Indices i where |sigma*(a_{i+1}) - sigma*(a_i)| exceeds max_jump.
std::vector<std::size_t> curve_jumps(std::span<const ZeroRecord> curve, double max_jump = 0.2);

/// Zeros of sigma -> zeta2(sigma, sigma; a) on (1/2, 1) from the diagonal
/// identity, confirmed by the continuation formula.
std::vector<ZeroRecord> diagonal_zeros(double a, const ZeroConfig& zcfg = {}, const EvalConfig& cfg = {});

}  // namespace lerchzeta
