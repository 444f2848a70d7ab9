#include "lerchzeta/zeta_single/relations.hpp"

#include <cmath>
#include <numeric>

#include "common.hpp"
#include "lerchzeta/errors.hpp"
#include "lerchzeta/numerics/complex_math.hpp"
#include "lerchzeta/zeta_single/dirichlet.hpp"
#include "lerchzeta/zeta_single/hurwitz.hpp"
#include "lerchzeta/zeta_single/lerch.hpp"

namespace lerchzeta {
namespace {

cplx unit_root(long num, long den) {
  num %= den;
  if (num < 0) num += den;
  const double turn = 2.0 * static_cast<double>(num) / static_cast<double>(den);
  return {numerics::cos_pi(turn), numerics::sin_pi(turn)};
}

RelationCheck make(int relation, std::string label, const Estimate& lhs, const Estimate& rhs) {
  return {relation, std::move(label), lhs.value, rhs.value, std::abs(lhs.value - rhs.value), lhs.error + rhs.error};
}

// zeta(s, n/q) for the right-hand sides. The full evaluator is needed only
// when the pole part does not cancel across the combination.
Estimate hurwitz_term(cplx s, double a, bool pole_cancels, const EvalConfig& cfg) {
  if (pole_cancels) return hurwitz_regularized(s, a, -1, cfg);
  return hurwitz(s, a, HurwitzMethod::Automatic, cfg);
}

}  // namespace

RelationCheck polylog_hurwitz_bridge(cplx s, int r, int q, BridgeDirection direction, const EvalConfig& cfg) {
  if (q < 2) throw DomainError("polylog_hurwitz_bridge: q = 1 would need Li_s(1) on both sides");
  if (r < 1 || r > q) throw DomainError("polylog_hurwitz_bridge: need 1 <= r <= q");
  const double qd = static_cast<double>(q);

  if (direction == BridgeDirection::HurwitzFromPolylog) {
    if (!(s.real() > 1.0)) throw DomainError("polylog_hurwitz_bridge: Hurwitz direction needs Re(s) > 1");
    const Estimate lhs = hurwitz(s, static_cast<double>(r) / qd, HurwitzMethod::Automatic, cfg);
    cplx acc = 0.0;
    double err = 0.0;
    for (int n = 1; n <= q; ++n) {
      const Estimate li = polylog(s, unit_root(n, q), cfg);
      acc += unit_root(-static_cast<long>(r) * n, q) * li.value;
      err += li.error;
    }
    const cplx scale = std::exp((s - 1.0) * std::log(qd));
    return make(3, "hurwitz-from-polylog r=" + std::to_string(r), lhs, {scale * acc, std::abs(scale) * err});
  }

  if (r == q && !(s.real() > 1.0)) throw DomainError("polylog_hurwitz_bridge: Li_s(1) needs Re(s) > 1");
  if (!(s.real() > 0.0)) throw DomainError("polylog_hurwitz_bridge: needs Re(s) > 0");
  const Estimate lhs = polylog(s, unit_root(r, q), cfg);
  cplx acc = 0.0;
  double err = 0.0;
  for (int n = 1; n <= q; ++n) {
    const Estimate z = hurwitz_term(s, static_cast<double>(n) / qd, r != q, cfg);
    acc += unit_root(static_cast<long>(r) * n, q) * z.value;
    err += z.error;
  }
  const cplx scale = numerics::pow_neg(qd, s);
  return make(4, "polylog-from-hurwitz r=" + std::to_string(r), lhs, {scale * acc, std::abs(scale) * err});
}

std::vector<RelationCheck> check_relations(int q, cplx s, const EvalConfig& cfg) {
  if (q < 2) throw DomainError("check_relations: need q >= 2");
  const auto chars = all_characters(q);
  const int phi = euler_phi(q);
  const double qd = static_cast<double>(q);
  const bool convergent = s.real() > 1.0;
  const cplx q_neg = numerics::pow_neg(qd, s);
  std::vector<RelationCheck> out;

  // L values from two independent routes
  std::vector<Estimate> l_values;
  for (const auto& chi : chars) {
    if (chi.is_principal() && !convergent && s == cplx(1.0)) throw PoleError("check_relations: s = 1");
    l_values.push_back(dirichlet_l(s, chi, cfg));
  }

  for (std::size_t i = 0; i < chars.size(); ++i) {
    const auto& chi = chars[i];
    const std::string tag = "chi#" + std::to_string(chi.index);
    // 1: in the strip dirichlet_l is itself the Euler-Maclaurin combination,
    // so the right side switches to the strip integral for zeta(s, r/q)
    if (convergent) {
      out.push_back(make(1, tag, l_values[i], dirichlet_l_via_hurwitz(s, chi, cfg)));
    } else {
      cplx acc = 0.0;
      double err = 0.0;
      for (int r = 1; r <= q; ++r) {
        if (chi(r) == cplx(0.0)) continue;
        const Estimate z = hurwitz(s, static_cast<double>(r) / qd, HurwitzMethod::IntegralStrip, cfg);
        acc += chi(r) * z.value;
        err += z.error;
      }
      out.push_back(make(1, tag, l_values[i], {q_neg * acc, std::abs(q_neg) * err}));
    }
    if (chi.is_primitive) {
      const Estimate lhs = convergent ? l_values[i] : dirichlet_l_via_hurwitz(s, chi, cfg);
      out.push_back(make(5, tag, lhs, dirichlet_l_via_polylog(s, chi, cfg)));
    }
  }

  for (int r = 1; r <= q; ++r) {
    const std::string tag = "r=" + std::to_string(r);
    const double a = static_cast<double>(r) / qd;
    if (std::gcd(r, q) == 1) {
      const Estimate lhs = hurwitz(s, a, HurwitzMethod::Automatic, cfg);
      cplx acc = 0.0;
      double err = 0.0;
      for (std::size_t i = 0; i < chars.size(); ++i) {
        acc += std::conj(chars[i](r)) * l_values[i].value;
        err += l_values[i].error;
      }
      const cplx scale = std::exp(s * std::log(qd)) / static_cast<double>(phi);
      out.push_back(make(2, tag, lhs, {scale * acc, std::abs(scale) * err}));
    }
    if (convergent) out.push_back(polylog_hurwitz_bridge(s, r, q, BridgeDirection::HurwitzFromPolylog, cfg));
    if (convergent || r < q) {
      out.push_back(polylog_hurwitz_bridge(s, r, q, BridgeDirection::PolylogFromHurwitz, cfg));
    }
    if (convergent || r < q) {
      const Estimate lhs = polylog(s, unit_root(r, q), cfg);
      cplx acc = 0.0;
      double err = 0.0;
      for (std::size_t i = 0; i < chars.size(); ++i) {
        const cplx g = gauss_sum(chars[i], r);
        acc += g * l_values[i].value;
        err += std::abs(g) * l_values[i].error;
      }
      acc /= static_cast<double>(phi);
      err /= static_cast<double>(phi);
      // the principal L carries the pole; the non-unit Hurwitz terms carry
      // the compensating pole parts, so use the full evaluator for both
      cplx rest = 0.0;
      for (int n = 1; n <= q; ++n) {
        if (std::gcd(n, q) == 1) continue;
        const Estimate z = hurwitz(s, static_cast<double>(n) / qd, HurwitzMethod::Automatic, cfg);
        rest += unit_root(static_cast<long>(r) * n, q) * z.value;
        err += std::abs(q_neg) * z.error;
      }
      out.push_back(make(6, tag, lhs, {acc + q_neg * rest, err}));
    }
  }
  return out;
}

}  // namespace lerchzeta
