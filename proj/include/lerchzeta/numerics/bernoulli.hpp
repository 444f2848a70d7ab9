#pragma once

#include <span>
#include <vector>

#include "lerchzeta/types.hpp"

namespace lerchzeta::numerics {

/// Bernoulli numbers B_0 .. B_L with the convention B_1 = -1/2.
///
/// B_0 .. B_20 come from exact fractions, higher even entries from the
/// closed form through zeta(2k) in extended precision (the textbook
/// recurrence loses about a digit per step). Odd entries beyond B_1 are exact
/// zeros. Tests check the recurrence sum_{k<=m} C(m+1,k) B_k = 0.
class BernoulliTable {
 public:
  static constexpr int kDefaultDegree = 64;

  explicit BernoulliTable(int degree = kDefaultDegree);

  /// Shared immutable table of the default degree.
  static const BernoulliTable& standard();

  int degree() const { return static_cast<int>(numbers_.size()) - 1; }
  double number(int l) const;
  std::span<const double> numbers() const { return numbers_; }

  /// B_l(x) by explicit expansion sum_k C(l, k) B_k x^(l-k).
  double poly(int l, double x) const;

  /// B_l(x - floor(x)).
  double periodic(int l, double x) const;

 private:
  std::vector<double> numbers_;
  std::vector<std::vector<double>> binomials_;  // rows 0..L of Pascal's triangle
};

double bernoulli_poly(int l, double x);
double periodic_bernoulli(int l, double x);

/// Rising factorial (s)_l = s (s+1) ... (s+l-1), (s)_0 = 1.
cplx pochhammer(cplx s, int l);

}  // namespace lerchzeta::numerics
