#include "lerchzeta/numerics/bernoulli.hpp"

#include <cmath>
#include <string>

#include "lerchzeta/errors.hpp"

namespace lerchzeta::numerics {

namespace {

// B_0 .. B_20 as exact fractions.
constexpr long double kSmall[][2] = {
    {1, 1},      {-1, 2},         {1, 6},   {0, 1}, {-1, 30}, {0, 1}, {1, 42},   {0, 1},
    {-1, 30},    {0, 1},          {5, 66},  {0, 1}, {-691, 2730}, {0, 1}, {7, 6}, {0, 1},
    {-3617, 510}, {0, 1},         {43867, 798}, {0, 1}, {-174611, 330}};

// B_m for even m > 20: (-1)^(m/2+1) 2 m! zeta(m) / (2 pi)^m. The zeta sum
// converges to full extended precision within 40 terms at m >= 22.
long double large_even(int m) {
  constexpr long double two_pi = 6.283185307179586476925286766559L;
  long double zeta = 0.0L;
  for (int n = 40; n >= 1; --n) zeta += std::pow(static_cast<long double>(n), -static_cast<long double>(m));
  long double ratio = 2.0L;  // 2 m! / (2 pi)^m built incrementally
  for (int k = 1; k <= m; ++k) ratio *= static_cast<long double>(k) / two_pi;
  const long double sign = (m / 2) % 2 == 1 ? 1.0L : -1.0L;
  return sign * ratio * zeta;
}

}  // namespace

BernoulliTable::BernoulliTable(int degree) {
  if (degree < 1) throw DomainError("BernoulliTable: degree must be >= 1");
  std::vector<long double> b(static_cast<std::size_t>(degree) + 1, 0.0L);
  for (int m = 0; m <= degree; ++m) {
    if (m <= 20) {
      b[m] = kSmall[m][0] / kSmall[m][1];
    } else if (m % 2 == 0) {
      b[m] = large_even(m);
    }
  }
  numbers_.assign(b.begin(), b.end());

  binomials_.resize(static_cast<std::size_t>(degree) + 1);
  for (int n = 0; n <= degree; ++n) {
    auto& row = binomials_[n];
    row.assign(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k < n; ++k) row[k] = binomials_[n - 1][k - 1] + binomials_[n - 1][k];
  }
}

const BernoulliTable& BernoulliTable::standard() {
  static const BernoulliTable table;
  return table;
}

double BernoulliTable::number(int l) const {
  if (l < 0 || l > degree()) {
    throw DegreeOverflow("Bernoulli number index " + std::to_string(l) +
                         " outside table degree " + std::to_string(degree()));
  }
  return numbers_[l];
}

double BernoulliTable::poly(int l, double x) const {
  if (l < 0 || l > degree()) {
    throw DegreeOverflow("Bernoulli polynomial degree " + std::to_string(l) +
                         " outside table degree " + std::to_string(degree()));
  }
  // Horner in x over coefficients C(l, k) B_{l-k} of x^k.
  const auto& row = binomials_[l];
  double acc = 0.0;
  for (int k = l; k >= 0; --k) acc = acc * x + row[k] * numbers_[l - k];
  return acc;
}

double BernoulliTable::periodic(int l, double x) const {
  return poly(l, x - std::floor(x));
}

double bernoulli_poly(int l, double x) { return BernoulliTable::standard().poly(l, x); }

double periodic_bernoulli(int l, double x) {
  if (l < 1) throw DomainError("periodic_bernoulli: order must be >= 1");
  return BernoulliTable::standard().periodic(l, x);
}

cplx pochhammer(cplx s, int l) {
  if (l < 0) throw DomainError("pochhammer: negative length");
  cplx acc = 1.0;
  for (int k = 0; k < l; ++k) acc *= s + static_cast<double>(k);
  return acc;
}

}  // namespace lerchzeta::numerics
