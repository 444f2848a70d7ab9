#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "lerchzeta/errors.hpp"
#include "lerchzeta/zeta_single/dirichlet.hpp"
#include "lerchzeta/zeta_single/hurwitz.hpp"
#include "lerchzeta/zeta_single/lerch.hpp"
#include "lerchzeta/zeta_single/relations.hpp"

using namespace lerchzeta;

namespace {

// tests/oracles/dirichlet_values.py
constexpr double kCatalan = 0.91596559417721901505;
constexpr double kL3At2 = 0.78130241289648629687;
constexpr double kL3AtHalf = 0.48086755769682862618;
constexpr double kL4AtHalf = 0.66769145718960917666;
const cplx kL4AtHalf3i{1.4685105834601206943, 0.19169891968453042018};
constexpr double kL5RealAt2 = 0.70621140325974096993;
const cplx kL5Complex{1.2516888661701180156, 0.21913272452589722467};
constexpr double kZeta2Quarter = 17.197329154507110739;
constexpr double kZeta25TwoThirds = 3.2371853652335189331;
constexpr double kLi2MinusOne = -0.82246703342411321824;

const DirichletCharacter& character(int q, int index) {
  static std::vector<std::vector<DirichletCharacter>> cache(13);
  if (cache[q].empty()) cache[q] = all_characters(q);
  return cache[q][index];
}

}  // namespace

TEST_CASE("character tables") {
  for (int q = 1; q <= 12; ++q) {
    const auto chars = all_characters(q);
    CHECK(static_cast<int>(chars.size()) == euler_phi(q));
    CHECK(chars[0].is_principal());
    for (const auto& chi : chars) {
      // multiplicative, periodic, zero off the units
      for (int m = 1; m <= q; ++m) {
        for (int n = 1; n <= q; ++n) CHECK(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-14);
        CHECK(chi(m + q) == chi(m));
      }
      CHECK(std::abs(chi(1) - 1.0) == 0.0);
    }
    // orthogonality of distinct characters
    for (std::size_t i = 0; i < chars.size(); ++i) {
      for (std::size_t j = 0; j < chars.size(); ++j) {
        cplx acc = 0.0;
        for (int n = 1; n <= q; ++n) acc += chars[i](n) * std::conj(chars[j](n));
        const double expect = i == j ? euler_phi(q) : 0.0;
        CHECK(std::abs(acc - expect) < 1e-12);
      }
    }
  }
  CHECK(character(4, 1)(3) == cplx(-1.0));
  CHECK(std::abs(character(5, 1)(2) - cplx(0, 1)) < 1e-15);
  CHECK(character(5, 2).is_real());
  CHECK_THROWS_AS(all_characters(13), DomainError);
  CHECK_THROWS_AS(all_characters(0), DomainError);
}

TEST_CASE("primitivity and conductors") {
  CHECK(character(3, 1).is_primitive);
  CHECK(character(4, 1).is_primitive);
  CHECK_FALSE(character(4, 0).is_primitive);
  CHECK(character(1, 0).is_primitive);
  // mod 6 and mod 10 carry no primitive characters; mod 12 has exactly one
  for (const auto& chi : all_characters(6)) CHECK_FALSE(chi.is_primitive);
  for (const auto& chi : all_characters(10)) CHECK_FALSE(chi.is_primitive);
  int primitive12 = 0;
  for (const auto& chi : all_characters(12)) primitive12 += chi.is_primitive ? 1 : 0;
  CHECK(primitive12 == 1);
  int primitive8 = 0;
  for (const auto& chi : all_characters(8)) primitive8 += chi.is_primitive ? 1 : 0;
  CHECK(primitive8 == 2);
  CHECK(character(6, 1).conductor == 3);
}

TEST_CASE("gauss sums") {
  CHECK(std::abs(gauss_sum(character(1, 0), 1) - 1.0) < 1e-15);
  CHECK(std::abs(gauss_sum(character(4, 1), 1) - cplx(0, 2)) < 1e-14);
  for (int q = 3; q <= 12; ++q) {
    for (const auto& chi : all_characters(q)) {
      if (!chi.is_primitive) continue;
      CHECK(std::abs(std::abs(gauss_sum(chi, 1)) - std::sqrt(static_cast<double>(q))) < 1e-13);
      // separable: G_r = chi(r) G_1 for units r
      for (int r = 1; r <= q; ++r) {
        CHECK(std::abs(gauss_sum(chi, r) - chi(r) * gauss_sum(chi, 1)) < 1e-13);
      }
    }
  }
  CHECK_THROWS_AS(gauss_sum(character(5, 1), 0), DomainError);
  CHECK_THROWS_AS(gauss_sum(character(5, 1), 6), DomainError);
}

TEST_CASE("direct L series") {
  CHECK(std::abs(dirichlet_l_direct(2.0, character(1, 0)).value - std::numbers::pi * std::numbers::pi / 6) < 1e-13);
  CHECK(std::abs(dirichlet_l_direct(2.0, character(4, 1)).value - kCatalan) < 1e-13);
  CHECK(std::abs(dirichlet_l_direct(2.0, character(3, 1)).value - kL3At2) < 1e-13);
  CHECK(std::abs(dirichlet_l_direct(2.0, character(5, 2)).value - kL5RealAt2) < 1e-13);
  CHECK(std::abs(dirichlet_l_direct({1.5, 2.0}, character(5, 1)).value - kL5Complex) < 1e-12);
  // slow convergence routes through the integral tail
  const Estimate slow = dirichlet_l_direct(1.01, character(4, 1));
  CHECK(std::abs(slow.value - dirichlet_l_via_hurwitz(1.01, character(4, 1)).value) < 1e-11);
  CHECK_THROWS_AS(dirichlet_l_direct(1.0, character(4, 1)), DomainError);
  CHECK_THROWS_AS(dirichlet_l_direct(0.5, character(3, 1)), DomainError);
}

TEST_CASE("L through Hurwitz zeta") {
  CHECK(std::abs(dirichlet_l_via_hurwitz(2.0, character(1, 0)).value - std::numbers::pi * std::numbers::pi / 6) < 1e-12);
  CHECK(std::abs(dirichlet_l_via_hurwitz(2.0, character(4, 1)).value - kCatalan) < 1e-12);
  CHECK(std::abs(dirichlet_l_via_hurwitz(2.0, character(3, 1)).value - kL3At2) < 1e-10);
  CHECK(std::abs(dirichlet_l_via_hurwitz(0.5, character(3, 1)).value - kL3AtHalf) < 1e-11);
  CHECK(std::abs(dirichlet_l_via_hurwitz(0.5, character(4, 1)).value - kL4AtHalf) < 1e-11);
  CHECK(std::abs(dirichlet_l_via_hurwitz({0.5, 3.0}, character(4, 1)).value - kL4AtHalf3i) < 1e-11);
  // no pole for non-principal characters: bounded approach to s = 1
  CHECK(std::abs(dirichlet_l_via_hurwitz(1.0, character(4, 1)).value - std::numbers::pi / 4) < 1e-12);
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    CHECK(std::abs(dirichlet_l_via_hurwitz(1.0 - eps, character(4, 1)).value - std::numbers::pi / 4) < 2.0 * eps);
  }
  CHECK_THROWS_AS(dirichlet_l_via_hurwitz(1.0, character(4, 0)), PoleError);
  CHECK_THROWS_AS(dirichlet_l_via_hurwitz(-0.5, character(4, 1)), DomainError);
  CHECK(std::abs(dirichlet_l(0.5, character(3, 1)).value - kL3AtHalf) < 1e-11);
  CHECK(std::abs(dirichlet_l(2.0, character(4, 1)).value - kCatalan) < 1e-13);
}

TEST_CASE("L through polylogarithms") {
  CHECK(std::abs(dirichlet_l_via_polylog(2.0, character(4, 1)).value - kCatalan) < 1e-12);
  CHECK(std::abs(dirichlet_l_via_polylog(2.0, character(5, 2)).value - kL5RealAt2) < 1e-12);
  const cplx half = dirichlet_l_via_polylog(0.5, character(3, 1)).value;
  CHECK(std::abs(half - dirichlet_l_via_hurwitz(0.5, character(3, 1)).value) < 1e-8);
  CHECK(std::abs(half - kL3AtHalf) < 1e-8);
  CHECK_THROWS_AS(dirichlet_l_via_polylog(2.0, character(4, 0)), DomainError);
  CHECK_THROWS_AS(dirichlet_l_via_polylog(2.0, character(6, 1)), DomainError);
}

TEST_CASE("Hurwitz zeta from L values") {
  const auto c1 = all_characters(1);
  CHECK(std::abs(hurwitz_via_l(2.0, 1, 1, c1).value - std::numbers::pi * std::numbers::pi / 6) < 1e-13);
  const auto c4 = all_characters(4);
  CHECK(std::abs(hurwitz_via_l(2.0, 1, 4, c4).value - kZeta2Quarter) < 1e-10 * kZeta2Quarter);
  CHECK(std::abs(hurwitz_via_l(2.0, 1, 4, c4).value - hurwitz_series(2.0, 0.25).value) < 1e-10 * kZeta2Quarter);
  const auto c3 = all_characters(3);
  CHECK(std::abs(hurwitz_via_l(2.5, 2, 3, c3).value - kZeta25TwoThirds) < 1e-12);
  CHECK_THROWS_AS(hurwitz_via_l(0.5, 1, 4, c4), DomainError);
  CHECK_THROWS_AS(hurwitz_via_l(2.0, 2, 4, c4), DomainError);
  CHECK_THROWS_AS(hurwitz_via_l(2.0, 1, 4, c3), DomainError);
}

TEST_CASE("polylog and Hurwitz bridge") {
  const auto li = polylog_hurwitz_bridge(2.0, 1, 2, BridgeDirection::PolylogFromHurwitz);
  CHECK(std::abs(li.lhs - kLi2MinusOne) < 1e-13);
  CHECK(std::abs(li.rhs - kLi2MinusOne) < 1e-12);
  for (int r = 1; r <= 4; ++r) {
    CHECK(polylog_hurwitz_bridge(3.0, r, 4, BridgeDirection::PolylogFromHurwitz).residual < 1e-10);
    CHECK(polylog_hurwitz_bridge(3.0, r, 4, BridgeDirection::HurwitzFromPolylog).residual < 1e-10);
  }
  CHECK(polylog_hurwitz_bridge({0.5, 2.0}, 3, 5, BridgeDirection::PolylogFromHurwitz).residual < 1e-8);
  CHECK_THROWS_AS(polylog_hurwitz_bridge(2.0, 1, 1, BridgeDirection::PolylogFromHurwitz), DomainError);
  CHECK_THROWS_AS(polylog_hurwitz_bridge(2.0, 1, 1, BridgeDirection::HurwitzFromPolylog), DomainError);
  CHECK_THROWS_AS(polylog_hurwitz_bridge(0.5, 4, 4, BridgeDirection::PolylogFromHurwitz), DomainError);
  CHECK_THROWS_AS(polylog_hurwitz_bridge(0.5, 1, 4, BridgeDirection::HurwitzFromPolylog), DomainError);
  CHECK_THROWS_AS(polylog_hurwitz_bridge(2.0, 0, 4, BridgeDirection::HurwitzFromPolylog), DomainError);
}

TEST_CASE("all six relations") {
  for (int q : {3, 4, 5}) {
    for (cplx s : {cplx(2.0), cplx(0.5), cplx(0.5, 4.0), cplx(1.5, -1.0)}) {
      const auto checks = check_relations(q, s);
      const double tol = s.real() > 1.0 ? 1e-9 : 1e-7;
      bool seen[7] = {};
      for (const auto& c : checks) {
        INFO("q=" << q << " s=" << s.real() << "+" << s.imag() << "i relation " << c.relation << " " << c.label);
        CHECK(c.residual < tol);
        seen[c.relation] = true;
      }
      for (int k : {1, 2, 4, 5, 6}) CHECK(seen[k]);
      CHECK(seen[3] == (s.real() > 1.0));
    }
  }
  // non-primitive moduli still check 1, 2, 4 and 6
  for (const auto& c : check_relations(12, 2.0)) CHECK(c.residual < 1e-9);
}
