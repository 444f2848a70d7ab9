#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "lerchzeta/errors.hpp"
#include "lerchzeta/format.hpp"
#include "lerchzeta/zeros/parallel.hpp"
#include "lerchzeta/zeros/theorem.hpp"
#include "lerchzeta/zeta_double/double_zeta.hpp"
#include "lerchzeta/zeta_single/hurwitz.hpp"
#include "lerchzeta/zeta_single/lerch.hpp"

namespace lerchzeta {
namespace {

constexpr double kBuffer = 1e-3;
constexpr double kStripLo = 1e-6;
constexpr int kScanPoints = 64;
constexpr double kPathZeroTol = 1e-8;  // double zeta values along the paths reach 1e3 and more

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  if (n > 1) v.back() = hi;
  return v;
}

std::vector<double> twentieths(int from, int to) {
  std::vector<double> v;
  for (int k = from; k <= to; ++k) v.push_back(k / 20.0);
  return v;
}

std::string num(double x) { return shortest(x); }

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

// Runs body and turns evaluator failures into an EvaluationError verdict.
void guarded(SampleVerdict& v, const std::function<void()>& body) {
  try {
    body();
  } catch (const DomainError& e) {
    v.status = SampleStatus::EvaluationError;
    v.error_class = "domain";
    v.detail = e.what();
  } catch (const NonConvergence& e) {
    v.status = SampleStatus::EvaluationError;
    v.error_class = "nonconvergence";
    v.detail = e.what();
  } catch (const TheoremContradiction& e) {
    v.status = SampleStatus::Contradiction;
    v.detail = e.what();
  }
}

double hurwitz_strip(double s, double a, const EvalConfig& cfg) {
  return hurwitz(s, a, HurwitzMethod::IntegralStrip, cfg).value.real();
}

double zeta2(double s1, double s2, double a, int l, const EvalConfig& cfg) {
  DoublePoint p;
  p.s1 = s1;
  p.s2 = s2;
  p.a = a;
  return ai_continuation(p, {l}, cfg).value.real();
}

void confirm_second(SampleVerdict& v, const ZeroConfig& zc) {
  if (v.zero && std::isfinite(v.zero->second_residual) && v.zero->second_residual > 10.0 * zc.zero_tol) {
    v.status = SampleStatus::EvaluationError;
    v.error_class = "nonconvergence";
    v.detail = "second evaluator residual " + num(v.zero->second_residual) + " exceeds 10 zero_tol";
  }
}

// ---- T1.2-1 ---------------------------------------------------------------

SampleVerdict hurwitz_sample(double a, int n_points, const VerifyConfig& cfg) {
  SampleVerdict v;
  v.params = {{"a", a}};
  guarded(v, [&] {
    if (a < 0.5) {
      v.kind = VerdictKind::ZeroFound;
      const double one[] = {a};
      auto rec = hurwitz_zero_curve(one, cfg.zero, cfg.eval, 1).front();
      rec.context = "T1.2-1 a=" + num(a);
      v.zero = rec;
      v.value = 0.0;
      confirm_second(v, cfg.zero);
      return;
    }
    v.kind = VerdictKind::SignConstant;
    v.sign = -1;
    const auto sig = linspace(0.01, 0.99, n_points);
    double worst = -std::numeric_limits<double>::infinity();
    double at = 0.0;
    for (double s : sig) {
      const double f = hurwitz_strip(s, a, cfg.eval);
      if (f > worst) worst = f, at = s;
    }
    v.value = worst;
    v.evidence = {{"points", static_cast<double>(sig.size())}, {"max_value", worst}, {"argmax_sigma", at}};
    if (!(worst < 0.0)) {
      v.status = SampleStatus::Contradiction;
      v.detail = "zeta(" + num(at) + ", " + num(a) + ") = " + num(worst) + " is not negative";
    }
  });
  return v;
}

// ---- T1.2-2 ---------------------------------------------------------------

std::vector<cplx> default_lerch_z() {
  std::vector<cplx> z = {-1.0, -0.6, -0.2, 0.2, 0.6, 0.9};
  for (int k = 1; k <= 6; ++k) z.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 7.0));
  return z;
}

SampleVerdict lerch_sample(double s, double a, cplx z, const EvalConfig& cfg) {
  SampleVerdict v;
  v.params = {{"sigma", s}, {"a", a}, {"z_re", z.real()}, {"z_im", z.imag()}};
  const bool real_z = z.imag() == 0.0;
  v.kind = real_z ? VerdictKind::SignConstant : VerdictKind::ImNonvanishing;
  v.sign = real_z ? 1 : sgn(z.imag());
  guarded(v, [&] {
    const auto est = lerch(s, a, z, cfg);
    v.value = est.value;
    v.error = est.error;
    const double part = real_z ? est.value.real() : est.value.imag();
    if (sgn(part) != v.sign || std::abs(part) <= est.error) {
      v.status = SampleStatus::Contradiction;
      v.detail = std::string(real_z ? "Re" : "Im") + " Phi = " + num(part) + " (error " + num(est.error) +
                 "), expected sign " + std::to_string(v.sign);
    }
  });
  return v;
}

// ---- T1.4-1 ---------------------------------------------------------------

SampleVerdict region_negative_sample(double a, int n, const VerifyConfig& cfg) {
  SampleVerdict v;
  v.params = {{"a", a}};
  v.kind = VerdictKind::SignConstant;
  v.sign = -1;
  guarded(v, [&] {
    double worst = -std::numeric_limits<double>::infinity();
    double at1 = 0.0, at2 = 0.0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
      const double s1 = (i + 0.5) / n;
      for (double s2 : linspace(1.0 + kBuffer, 2.0 - s1 - kBuffer, n)) {
        const double f = zeta2(s1, s2, a, -1, cfg.eval);
        ++count;
        if (f > worst) worst = f, at1 = s1, at2 = s2;
      }
    }
    v.value = worst;
    v.evidence = {{"points", static_cast<double>(count)}, {"max_value", worst}, {"argmax_s1", at1}, {"argmax_s2", at2}};
    if (!(worst < 0.0)) {
      v.status = SampleStatus::Contradiction;
      v.detail = "zeta2(" + num(at1) + ", " + num(at2) + "; " + num(a) + ") = " + num(worst) + " is not negative";
    }
  });
  return v;
}

// Smallest epsilon / 10^k (k = 1..4) at which the probe clears the threshold, or NaN.
double shrinking_epsilon(const std::function<double(double)>& probe, double eps, double threshold) {
  for (int k = 1; k <= 4; ++k) {
    eps /= 10.0;
    if (probe(eps) > threshold) return eps;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

// Largest epsilon / 10^k (k = 1..4) at which the probe is positive, or NaN.
double first_positive_epsilon(const std::function<double(double)>& probe, double eps) {
  for (int k = 1; k <= 4; ++k) {
    eps /= 10.0;
    if (probe(eps) > 0.0) return eps;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

SampleVerdict region_zero_sample(double a, const GridSpec& grid, const VerifyConfig& cfg) {
  SampleVerdict v;
  v.params = {{"a", a}};
  v.kind = VerdictKind::ZeroFound;
  guarded(v, [&] {
    const double eps = grid.epsilon;
    const double thr = grid.divergence_threshold;
    const auto& ec = cfg.eval;

    double sigma0 = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (double s : linspace(2.0 * eps, 1.0 - kBuffer, kScanPoints)) {
      const double f = hurwitz_strip(s, a, ec);
      if (f > best) best = f, sigma0 = s;
    }
    v.evidence = {{"sigma0", sigma0}, {"zeta_sigma0", best}};
    if (!(best > 0.0)) {
      v.status = SampleStatus::Contradiction;
      v.detail = "no sigma0 with zeta(sigma0, a) > 0 although a < 1/2";
      return;
    }

    auto plus = [&](double e) { return zeta2(sigma0 - e, 1.0 + e, a, -1, ec); };
    auto minus = [&](double e) { return -zeta2(1.0 - 2.0 * e, 1.0 + e, a, -1, ec); };
    v.evidence.emplace_back("epsilon", eps);
    std::string shortfall;
    double path_eps = eps;
    // each probe is signed so that the proven limit is +infinity
    for (const auto& [name, probe] : {std::pair<std::string, std::function<double(double)>>{"probe_plus", plus},
                                      std::pair<std::string, std::function<double(double)>>{"probe_minus", minus}}) {
      const double sign = name == "probe_plus" ? 1.0 : -1.0;
      const double value = probe(eps);
      v.evidence.emplace_back(name, sign * value);
      if (value > thr) continue;
      shortfall += name + " " + num(sign * value) + " below the " + num(thr) + " magnitude at epsilon " + num(eps) + "; ";
      v.evidence.emplace_back(name + "_threshold_epsilon", shrinking_epsilon(probe, eps, thr));
      if (value > 0.0) continue;
      const double e = first_positive_epsilon(probe, eps);
      v.evidence.emplace_back(name + "_sign_epsilon", e);
      if (!std::isfinite(e)) {
        v.status = SampleStatus::Contradiction;
        v.detail = name + " keeps the wrong sign down to epsilon " + num(eps * 1e-4);
        return;
      }
      path_eps = std::min(path_eps, e);
    }

    ZeroConfig zc = cfg.zero;
    zc.zero_tol = std::max(zc.zero_tol, kPathZeroTol);
    struct Path {
      const char* name;
      double s2;
      double lo, hi;
    };
    const Path paths[] = {{"s2=1.1", 1.1, kBuffer, 0.9 - kBuffer}, {"probe s2=1+eps", 1.0 + path_eps, sigma0 - path_eps, 1.0 - 2.0 * path_eps}};
    for (const auto& path : paths) {
      const RealFunction f = [&](double s1) { return zeta2(s1, path.s2, a, -1, ec); };
      const auto br = bracket_scan(f, path.lo, path.hi, kScanPoints, zc);
      if (br.empty()) continue;
      ZeroRecord rec = refine_zero(f, br.front(), zc, "ai-continuation");
      rec.a = a;
      rec.location2 = path.s2;
      rec.context = std::string("T1.4-1 path ") + path.name + " a=" + num(a);
      rec.second_method = "ai-continuation l=0";
      rec.second_residual = std::abs(zeta2(rec.location, path.s2, a, 0, ec));
      v.zero = rec;
      break;
    }
    if (!v.zero) {
      v.status = SampleStatus::Contradiction;
      v.detail = "no sign change along either path";
      return;
    }
    confirm_second(v, zc);
    if (v.status == SampleStatus::Pass && !shortfall.empty()) {
      v.status = SampleStatus::ProbeShortfall;
      v.detail = shortfall + "limits as predicted";
    }
  });
  return v;
}

// ---- T1.4-2/3/4 -----------------------------------------------------------

std::vector<cplx> default_double_z() { return {1.0, -1.0, 0.5, cplx(0.0, 1.0), std::polar(1.0, std::numbers::pi / 3.0)}; }

bool is_one(cplx z) { return z == cplx(1.0, 0.0); }

SampleVerdict twist_sample(double s1, double s2, double a, cplx z1, cplx z2, const EvalConfig& cfg) {
  SampleVerdict v;
  v.params = {{"s1", s1}, {"s2", s2}, {"a", a}, {"z1_re", z1.real()}, {"z1_im", z1.imag()},
              {"z2_re", z2.real()}, {"z2_im", z2.imag()}};
  const bool r1 = z1.imag() == 0.0;
  const bool r2 = z2.imag() == 0.0;
  if (r1 && r2) {
    v.kind = VerdictKind::SignConstant;
    v.sign = 1;
  } else if (r1 || r2) {
    v.kind = VerdictKind::ImNonvanishing;
    v.sign = sgn(r1 ? z2.imag() : z1.imag());
  } else {
    const double sin_product = z1.imag() * z2.imag() / (std::abs(z1) * std::abs(z2));
    v.evidence = {{"sin_product", sin_product}};
    if (sin_product > 0.0) {
      v.kind = VerdictKind::ImNonvanishing;
      v.sign = sgn(z1.imag());
    } else {
      v.kind = VerdictKind::RePositive;
      v.sign = 1;
    }
  }
  guarded(v, [&] {
    DoublePoint p;
    p.s1 = s1;
    p.s2 = s2;
    p.a = a;
    p.z1 = z1;
    p.z2 = z2;
    const auto est = double_integral(p, cfg);
    v.value = est.value;
    v.error = est.error;
    const double part = v.kind == VerdictKind::ImNonvanishing ? est.value.imag() : est.value.real();
    if (sgn(part) != v.sign || std::abs(part) <= est.error) {
      v.status = SampleStatus::Contradiction;
      v.detail = std::string(v.kind == VerdictKind::ImNonvanishing ? "Im" : "Re") + " Phi2 = " + num(part) +
                 " (error " + num(est.error) + "), expected sign " + std::to_string(v.sign);
    }
  });
  return v;
}

// ---- P1.5 -----------------------------------------------------------------

SampleVerdict diagonal_sample(double a, const GridSpec& grid, const VerifyConfig& cfg) {
  SampleVerdict v;
  v.params = {{"a", a}};
  v.kind = VerdictKind::ZeroFound;
  guarded(v, [&] {
    const double lo = diagonal_identity(0.5001, a, cfg.eval).value.real();
    const double hi = diagonal_identity(0.999, a, cfg.eval).value.real();
    v.evidence = {{"probe_0.5001", lo}, {"probe_0.999", hi}};
    const auto zeros = diagonal_zeros(a, cfg.zero, cfg.eval);
    v.evidence.emplace_back("zeros_found", static_cast<double>(zeros.size()));
    if (!(lo < 0.0) || !(hi > 0.0)) {
      v.status = SampleStatus::Contradiction;
      v.detail = "boundary probes have the wrong sign: " + num(lo) + ", " + num(hi);
      return;
    }
    if (zeros.empty()) {
      v.status = SampleStatus::Contradiction;
      v.detail = "no diagonal zero in (1/2, 1)";
      return;
    }
    v.zero = zeros.front();
    confirm_second(v, cfg.zero);
    if (v.status == SampleStatus::Pass && (-lo <= grid.divergence_threshold || hi <= grid.divergence_threshold)) {
      v.status = SampleStatus::ProbeShortfall;
      v.detail = "boundary probe magnitude below " + num(grid.divergence_threshold);
    }
  });
  return v;
}

template <class Make>
std::vector<SampleVerdict> run_all(std::size_t n, int jobs, Make make) {
  std::vector<SampleVerdict> out(n);
  parallel_for(n, jobs, [&](std::size_t i) { out[i] = make(i); });
  return out;
}

std::vector<std::pair<double, double>> default_pairs(Clause c) {
  switch (c) {
    case Clause::T1_4_2: return {{1.2, 0.3}, {1.5, 0.5}, {2.0, 0.8}, {1.1, 0.9}, {3.0, 0.2}};
    case Clause::T1_4_3: return {{0.3, 1.2}, {0.5, 1.5}, {0.8, 2.0}, {0.9, 1.1}, {0.2, 3.0}};
    default: return {{0.3, 0.3}, {0.5, 0.5}, {0.7, 0.2}, {0.2, 0.9}, {0.9, 0.9}};
  }
}

void check_pair(Clause c, double s1, double s2) {
  const bool ok = c == Clause::T1_4_2   ? s1 > 1.0 && s2 > 0.0
                  : c == Clause::T1_4_3 ? s1 > 0.0 && s2 > 1.0
                                        : s1 > 0.0 && s2 > 0.0;
  if (!ok) throw DomainError(std::string(clause_id(c)) + ": sigma pair (" + num(s1) + ", " + num(s2) + ") outside the clause");
}

void summarize(TheoremReport& r) {
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& s : r.samples) ++counts[static_cast<int>(s.status)];
  r.pass = counts[0] == r.samples.size() && !r.samples.empty();
  std::ostringstream o;
  o << clause_id(r.clause) << ": " << (r.pass ? "pass" : "fail") << " (" << counts[0] << "/" << r.samples.size()
    << " samples pass";
  if (counts[1]) o << ", " << counts[1] << " contradiction";
  if (counts[2]) o << ", " << counts[2] << " probe shortfall";
  if (counts[3]) o << ", " << counts[3] << " evaluation error";
  o << ")";
  r.summary = o.str();
}

}  // namespace

const char* clause_id(Clause c) {
  switch (c) {
    case Clause::T1_2_1: return "T1.2-1";
    case Clause::T1_2_2: return "T1.2-2";
    case Clause::T1_4_1: return "T1.4-1";
    case Clause::T1_4_2: return "T1.4-2";
    case Clause::T1_4_3: return "T1.4-3";
    case Clause::T1_4_4: return "T1.4-4";
    case Clause::P1_5: return "P1.5";
  }
  return "?";
}

const std::vector<Clause>& all_clauses() {
  static const std::vector<Clause> v = {Clause::T1_2_1, Clause::T1_2_2, Clause::T1_4_1, Clause::T1_4_2,
                                        Clause::T1_4_3, Clause::T1_4_4, Clause::P1_5};
  return v;
}

std::optional<Clause> parse_clause(const std::string& id) {
  for (Clause c : all_clauses()) {
    if (id == clause_id(c)) return c;
  }
  return std::nullopt;
}

const char* verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::ZeroFound: return "zero-found";
    case VerdictKind::SignConstant: return "sign-constant";
    case VerdictKind::ImNonvanishing: return "im-nonvanishing";
    case VerdictKind::RePositive: return "re-positive";
  }
  return "?";
}

const char* sample_status_name(SampleStatus s) {
  switch (s) {
    case SampleStatus::Pass: return "pass";
    case SampleStatus::Contradiction: return "contradiction";
    case SampleStatus::ProbeShortfall: return "probe-shortfall";
    case SampleStatus::EvaluationError: return "evaluation-error";
  }
  return "?";
}

TheoremReport verify_theorem(Clause clause, const GridSpec& grid, const VerifyConfig& cfg) {
  TheoremReport r;
  r.clause = clause;
  const int jobs = cfg.jobs;
  switch (clause) {
    case Clause::T1_2_1: {
      const auto as = grid.a_values.empty() ? twentieths(1, 20) : grid.a_values;
      for (double a : as) {
        if (!(a > 0.0 && a <= 1.0)) throw DomainError("T1.2-1: a must lie in (0, 1]");
      }
      const int n = grid.sigma_points > 0 ? grid.sigma_points : 256;
      r.samples = run_all(as.size(), jobs, [&](std::size_t i) { return hurwitz_sample(as[i], n, cfg); });
      break;
    }
    case Clause::T1_2_2: {
      const int n = grid.sigma_points > 0 ? grid.sigma_points : 10;
      std::vector<double> as = grid.a_values;
      if (as.empty()) {
        for (int j = 1; j <= 10; ++j) as.push_back(j / 10.0);
      }
      const auto zs = grid.z_values.empty() ? default_lerch_z() : grid.z_values;
      for (cplx z : zs) {
        if (z.imag() == 0.0 ? !(z.real() >= -1.0 && z.real() < 1.0) : std::abs(std::abs(z) - 1.0) > 1e-12) {
          throw DomainError("T1.2-2: z must be real in [-1, 1) or on the unit circle");
        }
      }
      const std::size_t total = static_cast<std::size_t>(n) * as.size() * zs.size();
      r.samples = run_all(total, jobs, [&](std::size_t k) {
        const std::size_t iz = k % zs.size();
        const std::size_t ia = (k / zs.size()) % as.size();
        const std::size_t is = k / (zs.size() * as.size());
        return lerch_sample((static_cast<double>(is) + 0.5) / n, as[ia], zs[iz], cfg.eval);
      });
      break;
    }
    case Clause::T1_4_1: {
      const auto as = grid.a_values.empty() ? std::vector<double>{0.1, 0.3, 0.45, 0.6, 0.75, 1.0} : grid.a_values;
      const int n = grid.sigma_points > 0 ? grid.sigma_points : 20;
      r.samples = run_all(as.size(), jobs, [&](std::size_t i) {
        return as[i] < 0.5 ? region_zero_sample(as[i], grid, cfg) : region_negative_sample(as[i], n, cfg);
      });
      break;
    }
    case Clause::T1_4_2:
    case Clause::T1_4_3:
    case Clause::T1_4_4: {
      const auto pairs = grid.sigma_pairs.empty() ? default_pairs(clause) : grid.sigma_pairs;
      for (const auto& [s1, s2] : pairs) check_pair(clause, s1, s2);
      const auto as = grid.a_values.empty() ? std::vector<double>{0.3, 0.7, 1.0} : grid.a_values;
      const auto zs = grid.z_values.empty() ? default_double_z() : grid.z_values;
      struct Job {
        double s1, s2, a;
        cplx z1, z2;
      };
      std::vector<Job> todo;
      for (const auto& [s1, s2] : pairs) {
        for (double a : as) {
          for (cplx z1 : zs) {
            for (cplx z2 : zs) {
              const bool keep = clause == Clause::T1_4_2   ? is_one(z1) && !is_one(z2)
                                : clause == Clause::T1_4_3 ? !is_one(z1) && is_one(z2)
                                                           : !is_one(z1) && !is_one(z2);
              if (keep) todo.push_back({s1, s2, a, z1, z2});
            }
          }
        }
      }
      r.samples = run_all(todo.size(), jobs, [&](std::size_t i) {
        const auto& j = todo[i];
        return twist_sample(j.s1, j.s2, j.a, j.z1, j.z2, cfg.eval);
      });
      break;
    }
    case Clause::P1_5: {
      const auto as = grid.a_values.empty() ? std::vector<double>{0.3, 0.7, 1.0} : grid.a_values;
      r.samples = run_all(as.size(), jobs, [&](std::size_t i) { return diagonal_sample(as[i], grid, cfg); });
      break;
    }
  }
  summarize(r);
  return r;
}

}  // namespace lerchzeta
