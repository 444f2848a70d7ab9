#include "lerchzeta/zeta_single/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "common.hpp"
#include "lerchzeta/errors.hpp"
#include "lerchzeta/numerics/complex_math.hpp"
#include "lerchzeta/numerics/gamma.hpp"
#include "lerchzeta/zeta_single/hurwitz.hpp"
#include "lerchzeta/zeta_single/lerch.hpp"

namespace lerchzeta {
namespace {

constexpr int kMaxModulus = 12;
constexpr long kMaxDirectTerms = 4096;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Generator {
  int g;
  int order;
};

// (Z/qZ)^* as a product of cyclic groups.
const std::map<int, std::vector<Generator>>& generator_table() {
  static const std::map<int, std::vector<Generator>> table = {
      {1, {}},
      {2, {}},
      {3, {{2, 2}}},
      {4, {{3, 2}}},
      {5, {{2, 4}}},
      {6, {{5, 2}}},
      {7, {{3, 6}}},
      {8, {{7, 2}, {5, 2}}},
      {9, {{2, 6}}},
      {10, {{3, 4}}},
      {11, {{2, 10}}},
      {12, {{5, 2}, {7, 2}}},
  };
  return table;
}

// e^(2 pi i num/den) with exact zeros at quarter turns
cplx root_of_unity(long num, long den) {
  num %= den;
  if (num < 0) num += den;
  const double turn = 2.0 * static_cast<double>(num) / static_cast<double>(den);
  return {numerics::cos_pi(turn), numerics::sin_pi(turn)};
}

void check_modulus(int q) {
  if (q < 1 || q > kMaxModulus) {
    throw DomainError("characters are tabulated for 1 <= q <= 12, got q = " + std::to_string(q));
  }
}

}  // namespace

cplx DirichletCharacter::operator()(long n) const {
  long r = n % modulus;
  if (r < 0) r += modulus;
  return values[r];
}

bool DirichletCharacter::is_real() const {
  for (const cplx& v : values) {
    if (v.imag() != 0.0) return false;
  }
  return true;
}

int euler_phi(int q) {
  int count = 0;
  for (int n = 1; n <= q; ++n) count += std::gcd(n, q) == 1 ? 1 : 0;
  return count;
}

std::vector<DirichletCharacter> all_characters(int q) {
  check_modulus(q);
  const auto& gens = generator_table().at(q);
  const std::size_t rank = gens.size();

  // discrete logarithm of every unit against the generators
  std::vector<std::vector<int>> dlog(q);
  std::vector<int> e(rank, 0);
  while (true) {
    long n = 1 % q;
    for (std::size_t k = 0; k < rank; ++k) {
      for (int i = 0; i < e[k]; ++i) n = n * gens[k].g % q;
    }
    dlog[n] = e;
    std::size_t k = 0;
    while (k < rank && ++e[k] == gens[k].order) e[k++] = 0;
    if (k == rank) break;
  }

  long lcm = 1;
  for (const auto& g : gens) lcm = std::lcm(lcm, static_cast<long>(g.order));

  std::vector<DirichletCharacter> out;
  std::vector<int> j(rank, 0);
  int index = 0;
  while (true) {
    DirichletCharacter chi;
    chi.modulus = q;
    chi.index = index++;
    chi.exponents = j;
    chi.values.assign(q, 0.0);
    for (int n = 0; n < q; ++n) {
      if (std::gcd(n, q) != 1) continue;
      long num = 0;
      for (std::size_t k = 0; k < rank; ++k) num += static_cast<long>(j[k]) * dlog[n][k] * (lcm / gens[k].order);
      chi.values[n] = root_of_unity(num, lcm);
    }
    if (q == 1) chi.values[0] = 1.0;
    // conductor: least d | q with chi(n) = 1 whenever n = 1 mod d
    chi.conductor = q;
    for (int d = 1; d < q; ++d) {
      if (q % d != 0) continue;
      bool induced = true;
      for (int n = 1; n < q && induced; ++n) {
        if (std::gcd(n, q) == 1 && n % d == 1 % d && chi.values[n] != cplx(1.0)) induced = false;
      }
      if (induced) {
        chi.conductor = d;
        break;
      }
    }
    chi.is_primitive = chi.conductor == q;
    out.push_back(std::move(chi));
    std::size_t k = 0;
    while (k < rank && ++j[k] == gens[k].order) j[k++] = 0;
    if (k == rank) break;
  }
  return out;
}

cplx gauss_sum(const DirichletCharacter& chi, int r) {
  const int q = chi.modulus;
  if (r < 1 || r > q) throw DomainError("gauss_sum: need 1 <= r <= q");
  cplx acc = 0.0;
  for (int n = 1; n <= q; ++n) {
    const cplx c = std::conj(chi(n));
    if (c == cplx(0.0)) continue;
    acc += c * root_of_unity(static_cast<long>(r) * n, q);
  }
  return acc;
}

Estimate dirichlet_l_direct(cplx s, const DirichletCharacter& chi, const EvalConfig& cfg) {
  const double sigma = s.real();
  if (!(sigma > 1.0)) throw DomainError("dirichlet_l_direct: needs Re(s) > 1");
  const int q = chi.modulus;
  const double tol = detail::target_tol(cfg, 1.0) * 0.5;
  const double need = std::pow(tol * (sigma - 1.0), 1.0 / (1.0 - sigma));

  auto partial = [&](long M, double& mass) {
    cplx acc = 0.0;
    mass = 0.0;
    for (long n = 1; n <= M; ++n) {
      const cplx c = chi(n);
      if (c == cplx(0.0)) continue;
      const cplx term = c * numerics::pow_neg(static_cast<double>(n), s);
      acc += term;
      mass += std::abs(term);
    }
    return acc;
  };

  double mass = 0.0;
  if (need <= static_cast<double>(kMaxDirectTerms)) {
    const long M = std::max(1L, static_cast<long>(std::ceil(need)));
    const cplx head = partial(M, mass);
    const double bound = std::pow(static_cast<double>(M), 1.0 - sigma) / (sigma - 1.0);
    return {head, bound + 4.0 * kEps * mass};
  }

  // whole periods, then (1/Gamma(s)) int x^(s-1) e^(-Mx) P(x) / (1 - e^(-qx)) dx
  // with P(x) = sum_{r=1}^{q} chi(r) e^(-r x)
  const long M = static_cast<long>(q) * ((64 + q - 1) / q);
  const cplx head = partial(M, mass);
  cplx chi_sum = 0.0;
  for (int r = 1; r <= q; ++r) chi_sum += chi(r);
  const bool principal = std::abs(chi_sum) > 0.5;
  const double t = s.imag();
  numerics::Integral<cplx> tail;
  if (principal) {
    auto f = [&](double x) -> cplx {
      cplx p = 0.0;
      for (int r = 1; r <= q; ++r) p += chi(r) * std::exp(-r * x);
      return detail::pow_imag(x, t) * std::exp(-static_cast<double>(M) * x) * p * (x / -std::expm1(-q * x));
    };
    tail = numerics::integrate_semi_infinite<cplx>(f, detail::quadrature_for(cfg, sigma - 2.0));
  } else {
    auto f = [&](double x) -> cplx {
      cplx p = 0.0;  // sum chi(r) (e^(-rx) - 1), exact cancellation of the constant
      for (int r = 1; r <= q; ++r) p += chi(r) * std::expm1(-r * x);
      return detail::pow_imag(x, t) * std::exp(-static_cast<double>(M) * x) * p / -std::expm1(-q * x);
    };
    tail = numerics::integrate_semi_infinite<cplx>(f, detail::quadrature_for(cfg, sigma - 1.0));
  }
  const cplx g = numerics::gamma(s);
  return {head + tail.value / g, tail.error / std::abs(g) + 4.0 * kEps * mass};
}

Estimate dirichlet_l_via_hurwitz(cplx s, const DirichletCharacter& chi, const EvalConfig& cfg) {
  if (!(s.real() > 0.0)) throw DomainError("dirichlet_l_via_hurwitz: needs Re(s) > 0");
  const int q = chi.modulus;
  const bool principal = chi.is_principal();
  if (principal && s == cplx(1.0)) throw PoleError("dirichlet_l_via_hurwitz: principal character has a pole at s = 1");
  cplx acc = 0.0;
  double err = 0.0;
  for (int r = 1; r <= q; ++r) {
    const cplx c = chi(r);
    if (c == cplx(0.0)) continue;
    const double a = static_cast<double>(r) / q;
    const Estimate z = principal ? hurwitz_euler_maclaurin(s, a, -1, cfg) : hurwitz_regularized(s, a, -1, cfg);
    acc += c * z.value;
    err += z.error;
  }
  const cplx scale = numerics::pow_neg(static_cast<double>(q), s);
  return {scale * acc, std::abs(scale) * err};
}

Estimate dirichlet_l_via_polylog(cplx s, const DirichletCharacter& chi, const EvalConfig& cfg) {
  if (!chi.is_primitive) throw DomainError("dirichlet_l_via_polylog: character must be primitive");
  if (!(s.real() > 0.0)) throw DomainError("dirichlet_l_via_polylog: needs Re(s) > 0");
  const int q = chi.modulus;
  const cplx g = gauss_sum(chi, 1);
  if (std::abs(g) < 1e-12) throw DomainError("dirichlet_l_via_polylog: vanishing Gauss sum");
  cplx acc = 0.0;
  double err = 0.0;
  for (int r = 1; r <= q; ++r) {
    const cplx c = std::conj(chi(r));
    if (c == cplx(0.0)) continue;
    const Estimate li = polylog(s, root_of_unity(r, q), cfg);
    acc += c * li.value;
    err += li.error;
  }
  return {acc / g, err / std::abs(g)};
}

Estimate dirichlet_l(cplx s, const DirichletCharacter& chi, const EvalConfig& cfg) {
  if (s.real() > 1.0) return dirichlet_l_direct(s, chi, cfg);
  return dirichlet_l_via_hurwitz(s, chi, cfg);
}

Estimate hurwitz_via_l(cplx s, int r, int q, std::span<const DirichletCharacter> characters,
                       const EvalConfig& cfg) {
  if (!(s.real() > 1.0)) throw DomainError("hurwitz_via_l: needs Re(s) > 1");
  if (r < 1 || r > q || std::gcd(r, q) != 1) throw DomainError("hurwitz_via_l: needs 1 <= r <= q, gcd(r, q) = 1");
  if (static_cast<int>(characters.size()) != euler_phi(q)) {
    throw DomainError("hurwitz_via_l: expected all phi(q) characters mod q");
  }
  cplx acc = 0.0;
  double err = 0.0;
  for (const auto& chi : characters) {
    if (chi.modulus != q) throw DomainError("hurwitz_via_l: character modulus mismatch");
    const Estimate l = dirichlet_l_direct(s, chi, cfg);
    acc += std::conj(chi(r)) * l.value;
    err += l.error;
  }
  const cplx scale = std::exp(s * std::log(static_cast<double>(q))) / static_cast<double>(euler_phi(q));
  return {scale * acc, std::abs(scale) * err};
}

}  // namespace lerchzeta
