#pragma once

// Double-exponential quadrature on (0,1], [pivot,inf), (0,inf) and (0,inf)^2.
//
// Integrands are passed as their regular part f; the algebraic factor
// x^alpha at the origin is supplied through Quadrature::singularity_exponent
// and handled by the rule itself. An integrand may be scalar, T f(double), or
// batched, void f(std::span<const double> x, std::span<T> out); batched
// integrands must name T explicitly.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <sstream>
#include <type_traits>
#include <vector>

#include "lerchzeta/errors.hpp"
#include "lerchzeta/simd/kernels.hpp"

namespace lerchzeta::numerics {

struct Quadrature {
  int max_depth = 10;
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  double singularity_exponent = 0.0;

  void validate() const {
    if (!(abs_tol > 0.0 || rel_tol > 0.0)) throw DomainError("quadrature: abs_tol or rel_tol must be positive");
    if (abs_tol < 0.0 || rel_tol < 0.0) throw DomainError("quadrature: negative tolerance");
    if (!(singularity_exponent > -1.0)) throw DomainError("quadrature: singularity exponent must exceed -1");
    if (max_depth < 3) throw DomainError("quadrature: max_depth must be at least 3");
  }

  Quadrature with_exponent(double alpha) const {
    Quadrature q = *this;
    q.singularity_exponent = alpha;
    return q;
  }
  Quadrature tightened(double factor) const {
    Quadrature q = *this;
    q.abs_tol *= factor;
    q.rel_tol *= factor;
    return q;
  }
};

template <class T>
struct Integral {
  T value{};
  double error = 0.0;
  int levels = 0;
  std::size_t evaluations = 0;
};

namespace detail {

enum class Map { Unit, Tail };

inline constexpr double kStep0 = 0.5;
inline constexpr int kMinLevels = 3;

// Node t -> (x, dx/dt); false when the node under/overflows.
inline bool de_node(Map m, double t, double pivot, double& x, double& w) {
  constexpr double pi = std::numbers::pi;
  if (m == Map::Unit) {
    const double s = pi * std::sinh(t);
    const double e = std::exp(-std::abs(s));
    const double small = e / (1.0 + e);
    const double large = 1.0 / (1.0 + e);
    x = s >= 0 ? large : small;
    w = pi * std::cosh(t) * small * large;
    return x > 0.0 && w > 0.0 && std::isfinite(w);
  }
  const double v = 0.5 * pi * std::sinh(t);
  const double ev = std::exp(v);
  x = pivot + ev;
  w = 0.5 * pi * std::cosh(t) * ev;
  return std::isfinite(x) && std::isfinite(w) && w > 0.0;
}

inline void t_range(Map m, double& lo, double& hi) {
  if (m == Map::Unit) {
    lo = -5.0;
    hi = 5.0;
  } else {
    lo = -4.5;
    hi = 6.5;
  }
}

template <class T>
inline double magnitude(const T& v) {
  return std::abs(v);
}

// Core driver. g(x, out, aux) fills out[i] with the transformed integrand and,
// when aux is non-empty, aux[i] with a nonnegative error density that is
// integrated alongside (used for inner errors of iterated integrals).
template <class T, class G>
Integral<T> de_integrate(Map m, double pivot, G&& g, const Quadrature& q, bool track_aux) {
  q.validate();
  double t_lo = 0.0;
  double t_hi = 0.0;
  t_range(m, t_lo, t_hi);

  std::vector<double> ts;
  std::vector<double> xs;
  std::vector<double> ws;
  std::vector<T> vals;
  std::vector<double> aux;
  Integral<T> result;

  auto eval_nodes = [&](const std::vector<double>& tt) {
    xs.clear();
    ws.clear();
    std::vector<double> kept_t;
    for (double t : tt) {
      double x = 0.0;
      double w = 0.0;
      if (de_node(m, t, pivot, x, w)) {
        xs.push_back(x);
        ws.push_back(w);
        kept_t.push_back(t);
      }
    }
    vals.assign(xs.size(), T{});
    aux.assign(track_aux ? xs.size() : 0, 0.0);
    if (!xs.empty()) g(std::span<const double>(xs), std::span<T>(vals), std::span<double>(aux));
    result.evaluations += xs.size();
    return kept_t;
  };

  // Level 0 over the full window, then trim the window to where the terms
  // matter relative to the L1 mass.
  const int k_lo = static_cast<int>(std::ceil(t_lo / kStep0));
  const int k_hi = static_cast<int>(std::floor(t_hi / kStep0));
  for (int k = k_lo; k <= k_hi; ++k) ts.push_back(k * kStep0);
  const std::vector<double> kept = eval_nodes(ts);
  double l1 = 0.0;
  for (std::size_t i = 0; i < kept.size(); ++i) l1 += ws[i] * magnitude(vals[i]);
  if (!std::isfinite(l1)) {
    throw NonConvergence("quadrature: integrand not finite on the level-0 nodes");
  }
  const double negligible = 1e-20 * l1;
  double cut_lo = t_hi;
  double cut_hi = t_lo;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (ws[i] * magnitude(vals[i]) > negligible) {
      cut_lo = std::min(cut_lo, kept[i]);
      cut_hi = std::max(cut_hi, kept[i]);
    }
  }
  if (cut_lo > cut_hi) {
    result.levels = 0;
    return result;  // identically zero on the sampled nodes
  }
  cut_lo = std::max(t_lo, cut_lo - kStep0);
  cut_hi = std::min(t_hi, cut_hi + kStep0);

  T sum{};
  double aux_sum = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < cut_lo || kept[i] > cut_hi) continue;
    sum += ws[i] * vals[i];
    mass += ws[i] * magnitude(vals[i]);
    if (track_aux) aux_sum += ws[i] * aux[i];
  }
  double h = kStep0;
  T estimate = h * sum;
  double aux_estimate = h * aux_sum;

  for (int level = 1; level <= q.max_depth; ++level) {
    h *= 0.5;
    ts.clear();
    // odd multiples of h inside the window
    const long first = static_cast<long>(std::ceil((cut_lo / h - 1.0) / 2.0));
    const long last = static_cast<long>(std::floor((cut_hi / h - 1.0) / 2.0));
    for (long j = first; j <= last; ++j) ts.push_back((2 * j + 1) * h);
    const std::vector<double> fresh = eval_nodes(ts);
    T add{};
    double add_aux = 0.0;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      add += ws[i] * vals[i];
      mass += ws[i] * magnitude(vals[i]);
      if (track_aux) add_aux += ws[i] * aux[i];
    }
    sum += add;
    aux_sum += add_aux;
    const T next = h * sum;
    const double diff = magnitude(next - estimate);
    estimate = next;
    aux_estimate = h * aux_sum;
    if (!std::isfinite(magnitude(estimate))) {
      throw NonConvergence("quadrature: non-finite partial sum");
    }
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * h * mass;
    const double tol = std::max({q.abs_tol, q.rel_tol * magnitude(estimate), noise});
    if (level >= kMinLevels && diff <= tol) {
      result.value = estimate;
      result.error = diff + aux_estimate;
      result.levels = level;
      return result;
    }
    result.error = diff;
  }
  std::ostringstream msg;
  msg << "quadrature: refinement cap " << q.max_depth << " reached, last difference " << result.error;
  throw NonConvergence(msg.str());
}

template <class T, class F>
struct value_type_of {
  using type = T;
};
template <class F>
struct value_type_of<void, F> {
  using type = std::decay_t<std::invoke_result_t<F&, double>>;
};

// Unified batch call for scalar or batched integrands.
template <class T, class F>
inline void call_batch(F& f, std::span<const double> x, std::span<T> out) {
  if constexpr (std::is_invocable_v<F&, std::span<const double>, std::span<T>>) {
    f(x, out);
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<T>(f(x[i]));
  }
}

// Multiply by the algebraic factor; an exactly vanishing integrand stays zero
// where the factor overflows.
template <class T>
inline void scale_values(std::span<T> out, std::span<double> aux, const std::vector<double>& factor) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] != T{}) out[i] *= factor[i];
  }
  for (std::size_t i = 0; i < aux.size(); ++i) {
    if (aux[i] != 0.0) aux[i] *= factor[i];
  }
}

// Integral over (0,1] of x^alpha f(x). For alpha < 0 the substitution
// x = u^p with p = 1/(1+alpha) removes the singular factor. f3(x, out, aux)
// fills values and (optionally) error densities; both get the same factor.
template <class T, class F3>
Integral<T> unit_impl(F3& f3, const Quadrature& q, bool track_aux) {
  const double alpha = q.singularity_exponent;
  std::vector<double> mapped;
  std::vector<double> factor;
  auto g = [&](std::span<const double> u, std::span<T> out, std::span<double> aux) {
    if (alpha < 0.0) {
      const double p = 1.0 / (1.0 + alpha);
      mapped.resize(u.size());
      simd::pow_batch(u, p, mapped);
      // keep the mapped nodes strictly positive; their weights are negligible
      for (auto& x : mapped) x = std::max(x, std::numeric_limits<double>::min());
      f3(std::span<const double>(mapped), out, aux);
      for (auto& v : out) v *= p;
      for (auto& e : aux) e *= p;
    } else if (alpha > 0.0) {
      factor.resize(u.size());
      simd::pow_batch(u, alpha, factor);
      f3(u, out, aux);
      scale_values(out, aux, factor);
    } else {
      f3(u, out, aux);
    }
  };
  return de_integrate<T>(Map::Unit, 0.0, g, q, track_aux);
}

template <class T, class F3>
Integral<T> tail_impl(F3& f3, const Quadrature& q, double pivot, bool track_aux) {
  const double alpha = q.singularity_exponent;
  std::vector<double> factor;
  auto g = [&](std::span<const double> x, std::span<T> out, std::span<double> aux) {
    f3(x, out, aux);
    if (alpha != 0.0) {
      factor.resize(x.size());
      simd::pow_batch(x, alpha, factor);
      scale_values(out, aux, factor);
    }
  };
  return de_integrate<T>(Map::Tail, pivot, g, q, track_aux);
}

template <class T, class F>
auto plain(F& f) {
  return [&f](std::span<const double> x, std::span<T> out, std::span<double>) {
    call_batch<T>(f, x, out);
  };
}

template <class T, class F>
struct value_type_of2 {
  using type = T;
};
template <class F>
struct value_type_of2<void, F> {
  using type = std::decay_t<std::invoke_result_t<F&, double, double>>;
};

}  // namespace detail

/// Integral over (0,1] of x^alpha f(x), alpha = q.singularity_exponent.
template <class T = void, class F>
auto integrate_unit(F&& f, const Quadrature& q) {
  using V = typename detail::value_type_of<T, std::remove_reference_t<F>>::type;
  auto f3 = detail::plain<V>(f);
  return detail::unit_impl<V>(f3, q, false);
}

/// Integral over [pivot, inf) of x^alpha f(x); f must decay exponentially or
/// algebraically faster than x^(-1-alpha).
template <class T = void, class F>
auto integrate_tail(F&& f, const Quadrature& q, double pivot = 1.0) {
  using V = typename detail::value_type_of<T, std::remove_reference_t<F>>::type;
  if (!(pivot > 0.0)) throw DomainError("integrate_tail: pivot must be positive");
  auto f3 = detail::plain<V>(f);
  return detail::tail_impl<V>(f3, q, pivot, false);
}

/// Integral over (0, inf) of x^alpha f(x), split at the pivot 1.
template <class T = void, class F>
auto integrate_semi_infinite(F&& f, const Quadrature& q) {
  using V = typename detail::value_type_of<T, std::remove_reference_t<F>>::type;
  auto f3 = detail::plain<V>(f);
  const Integral<V> head = detail::unit_impl<V>(f3, q, false);
  const Integral<V> tail = detail::tail_impl<V>(f3, q, 1.0, false);
  return Integral<V>{head.value + tail.value, head.error + tail.error,
                     std::max(head.levels, tail.levels), head.evaluations + tail.evaluations};
}

/// Integral over [lo, hi] of a function regular on the open interval.
template <class T = void, class F>
auto integrate_interval(F&& f, double lo, double hi, const Quadrature& q) {
  using V = typename detail::value_type_of<T, std::remove_reference_t<F>>::type;
  const double width = hi - lo;
  std::vector<double> mapped;
  auto f3 = [&](std::span<const double> u, std::span<V> out, std::span<double>) {
    mapped.resize(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) mapped[i] = lo + width * u[i];
    detail::call_batch<V>(f, std::span<const double>(mapped), out);
    for (auto& v : out) v *= width;
  };
  return detail::unit_impl<V>(f3, q.with_exponent(0.0), false);
}

/// Iterated integral over (0,inf)^2 of x^alpha_x y^alpha_y f(x, y): outer in y,
/// inner in x with a tolerance ten times tighter. The inner error estimates
/// are integrated with the outer rule and added to the reported error.
///
/// f is either scalar, T f(double x, double y), or batched over x,
/// void f(std::span<const double> x, double y, std::span<T> out).
template <class T = void, class F>
auto integrate_double_semi_infinite(F&& f, const Quadrature& q, double alpha_x, double alpha_y) {
  using Fn = std::remove_reference_t<F>;
  using V = typename detail::value_type_of2<T, Fn>::type;
  // The outer tail weights grow without bound, so an absolute inner tolerance
  // would let far-out nodes carry large relative errors.
  Quadrature inner_q = q.tightened(0.1).with_exponent(alpha_x);
  inner_q.abs_tol = 0.0;
  if (!(inner_q.rel_tol > 0.0)) inner_q.rel_tol = 1e-14;
  const Quadrature outer_q = q.with_exponent(alpha_y);

  std::size_t evaluations = 0;
  auto outer = [&](std::span<const double> ys, std::span<V> out, std::span<double> aux) {
    for (std::size_t i = 0; i < ys.size(); ++i) {
      const double y = ys[i];
      auto fx = [&](std::span<const double> x, std::span<V> vals) {
        if constexpr (std::is_invocable_v<Fn&, std::span<const double>, double, std::span<V>>) {
          f(x, y, vals);
        } else {
          for (std::size_t k = 0; k < x.size(); ++k) vals[k] = static_cast<V>(f(x[k], y));
        }
      };
      const Integral<V> r = integrate_semi_infinite<V>(fx, inner_q);
      out[i] = r.value;
      evaluations += r.evaluations;
      if (!aux.empty()) aux[i] = r.error;
    }
  };
  const Integral<V> head = detail::unit_impl<V>(outer, outer_q, true);
  const Integral<V> tail = detail::tail_impl<V>(outer, outer_q, 1.0, true);
  return Integral<V>{head.value + tail.value, head.error + tail.error,
                     std::max(head.levels, tail.levels), evaluations};
}

}  // namespace lerchzeta::numerics
