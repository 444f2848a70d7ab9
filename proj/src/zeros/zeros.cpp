#include "lerchzeta/zeros/zeros.hpp"

#include <cmath>
#include <sstream>

#include "lerchzeta/errors.hpp"
#include "lerchzeta/format.hpp"
#include "lerchzeta/zeros/parallel.hpp"
#include "lerchzeta/zeta_double/double_zeta.hpp"
#include "lerchzeta/zeta_single/hurwitz.hpp"

namespace lerchzeta {
namespace {

constexpr double kStripLo = 1e-6;
constexpr double kPoleBuffer = 1e-3;
constexpr int kScanPoints = 64;

std::string at(double x) { return " (at " + shortest(x) + ")"; }

double evaluate(const RealFunction& f, double x) {
  try {
    return f(x);
  } catch (const PoleError& e) {
    throw PoleError(e.what() + at(x));
  } catch (const DegreeOverflow& e) {
    throw DegreeOverflow(e.what() + at(x));
  } catch (const DomainError& e) {
    throw DomainError(e.what() + at(x));
  } catch (const NonConvergence& e) {
    throw NonConvergence(e.what() + at(x));
  }
}

}  // namespace

std::vector<Bracket> bracket_scan_points(const RealFunction& f, std::span<const double> points,
                                         const ZeroConfig& cfg) {
  std::vector<Bracket> out;
  if (points.empty()) return out;
  std::vector<double> vals(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) vals[i] = evaluate(f, points[i]);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::abs(vals[i]) < cfg.zero_tol) {
      out.push_back({points[i], points[i], vals[i], vals[i], true});
      continue;
    }
    if (i + 1 < points.size() && std::abs(vals[i + 1]) >= cfg.zero_tol && (vals[i] < 0.0) != (vals[i + 1] < 0.0)) {
      out.push_back({points[i], points[i + 1], vals[i], vals[i + 1], false});
    }
  }
  return out;
}

std::vector<Bracket> bracket_scan(const RealFunction& f, double lo, double hi, int n_points, const ZeroConfig& cfg) {
  if (n_points < 2 || !(hi > lo)) throw DomainError("bracket_scan: need lo < hi and at least 2 points");
  std::vector<double> pts(n_points);
  for (int i = 0; i < n_points; ++i) pts[i] = lo + (hi - lo) * i / (n_points - 1);
  pts.back() = hi;
  return bracket_scan_points(f, pts, cfg);
}

ZeroRecord refine_zero(const RealFunction& f, const Bracket& b, const ZeroConfig& cfg, const std::string& method) {
  ZeroRecord rec;
  rec.method = method;
  if (b.degenerate) {
    rec.location = rec.lo = rec.hi = b.lo;
    rec.residual = std::abs(b.f_lo);
    return rec;
  }
  double lo = b.lo;
  double hi = b.hi;
  double flo = b.f_lo;
  double fhi = b.f_hi;
  if (!(flo * fhi < 0.0)) throw DomainError("refine_zero: bracket has no sign change");
  double mid = 0.5 * (lo + hi);
  double fmid = evaluate(f, mid);
  int it = 1;
  auto step = [&] {
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
    mid = 0.5 * (lo + hi);
    fmid = evaluate(f, mid);
    ++it;
  };
  while (hi - lo > cfg.width_tol && fmid != 0.0 && it < cfg.max_iterations) step();
  // polish to floating-point resolution when the residual is still large
  while (std::abs(fmid) > cfg.zero_tol && mid > lo && mid < hi && it < cfg.max_iterations) step();
  rec.location = mid;
  rec.lo = lo;
  rec.hi = hi;
  rec.residual = std::abs(fmid);
  rec.iterations = it;
  if (rec.residual > cfg.zero_tol) {
    std::ostringstream o;
    o.precision(17);
    o << "refine_zero: residual " << rec.residual << " above " << cfg.zero_tol << " on final bracket [" << lo << ", "
      << hi << "]";
    throw NonConvergence(o.str());
  }
  return rec;
}

std::vector<ZeroRecord> hurwitz_zero_curve(std::span<const double> a_grid, const ZeroConfig& zcfg,
                                           const EvalConfig& cfg, int jobs) {
  for (double a : a_grid) {
    if (!(a > 0.0 && a < 0.5)) throw DomainError("hurwitz_zero_curve: every a must lie in (0, 1/2)");
  }
  std::vector<ZeroRecord> out(a_grid.size());
  parallel_for(a_grid.size(), jobs, [&](std::size_t i) {
    const double a = a_grid[i];
    const RealFunction f = [&](double s) { return hurwitz(s, a, HurwitzMethod::IntegralStrip, cfg).value.real(); };
    const auto brackets = bracket_scan(f, kStripLo, 1.0 - kPoleBuffer, kScanPoints, zcfg);
    if (brackets.empty()) {
      throw TheoremContradiction("no zero of zeta(sigma, " + shortest(a) + ") found on (0,1) although a < 1/2");
    }
    ZeroRecord rec = refine_zero(f, brackets.front(), zcfg, method_name(HurwitzMethod::IntegralStrip));
    rec.a = a;
    rec.context = "hurwitz a=" + shortest(a);
    rec.second_method = method_name(HurwitzMethod::EulerMaclaurin);
    rec.second_residual = std::abs(hurwitz_euler_maclaurin(rec.location, a, -1, cfg).value.real());
    out[i] = rec;
  });
  return out;
}

std::vector<std::size_t> curve_jumps(std::span<const ZeroRecord> curve, double max_jump) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    if (std::abs(curve[i + 1].location - curve[i].location) > max_jump) out.push_back(i);
  }
  return out;
}

std::vector<ZeroRecord> diagonal_zeros(double a, const ZeroConfig& zcfg, const EvalConfig& cfg) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("diagonal_zeros: needs 0 < a <= 1");
  const RealFunction f = [&](double s) { return diagonal_identity(s, a, cfg).value.real(); };
  const auto brackets = bracket_scan(f, 0.5001, 0.999, kScanPoints, zcfg);
  std::vector<ZeroRecord> out;
  for (const auto& b : brackets) {
    ZeroRecord rec = refine_zero(f, b, zcfg, "diagonal-identity");
    rec.a = a;
    rec.location2 = rec.location;
    rec.context = "double-diagonal a=" + shortest(a);
    DoublePoint p;
    p.s1 = rec.location;
    p.s2 = rec.location;
    p.a = a;
    rec.second_method = "ai-continuation";
    rec.second_residual = std::abs(ai_continuation(p, {1}, cfg).value.real());
    out.push_back(rec);
  }
  return out;
}

}  // namespace lerchzeta
