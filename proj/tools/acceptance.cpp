// Acceptance checks: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lerchzeta/format.hpp"
#include "lerchzeta/kernel/kernel.hpp"
#include "lerchzeta/zeros/theorem.hpp"
#include "lerchzeta/zeta_double/double_zeta.hpp"
#include "lerchzeta/zeta_single/dirichlet.hpp"
#include "lerchzeta/zeta_single/hurwitz.hpp"
#include "lerchzeta/zeta_single/lerch.hpp"
#include "lerchzeta/zeta_single/relations.hpp"

using namespace lerchzeta;
using lerchzeta::shortest;

namespace {

// Absolute bounds sit below the default relative tolerance once |zeta| is
// large (small a), so criteria 3 and 11 run at full precision.
EvalConfig full_precision() {
  EvalConfig c;
  c.rel_tol = 1e-16;
  return c;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << why;
  }
};

double evidence(const SampleVerdict& s, const std::string& name) {
  for (const auto& [k, v] : s.evidence)
    if (k == name) return v;
  return std::nan("");
}

double param(const SampleVerdict& s, const std::string& name) {
  for (const auto& [k, v] : s.params)
    if (k == name) return v;
  return std::nan("");
}

std::string describe(const SampleVerdict& s) {
  std::string out;
  for (const auto& [k, v] : s.params) out += (out.empty() ? "" : " ") + k + "=" + shortest(v);
  return out;
}

// Counts samples by status and appends the first few non-pass samples.
void record_report(const TheoremReport& r, Outcome& o) {
  if (r.pass) return;
  int shown = 0;
  for (const auto& s : r.samples) {
    if (s.status == SampleStatus::Pass) continue;
    if (shown++ < 4) o.fail(std::string(sample_status_name(s.status)) + " at " + describe(s) +
                            (s.detail.empty() ? "" : " (" + s.detail + ")"));
  }
  if (shown > 4) o.fail(std::to_string(shown - 4) + " more");
}

Outcome criterion1() {
  Outcome o;
  const auto r = verify_theorem(Clause::T1_2_1);
  record_report(r, o);
  double worst = 0.0, worst2 = 0.0;
  int zeros = 0, negative = 0;
  for (const auto& s : r.samples) {
    const double a = param(s, "a");
    if (a < 0.5) {
      if (!s.zero) { o.fail("no zero at a=" + shortest(a)); continue; }
      ++zeros;
      worst = std::max(worst, s.zero->residual);
      worst2 = std::max(worst2, s.zero->second_residual);
      if (!(s.zero->location > 0.0 && s.zero->location < 1.0)) o.fail("zero outside (0,1) at a=" + shortest(a));
      if (!(s.zero->residual < 1e-10)) o.fail("residual " + shortest(s.zero->residual) + " at a=" + shortest(a));
      if (!(s.zero->second_residual < 1e-9))
        o.fail("second evaluator residual " + shortest(s.zero->second_residual) + " at a=" + shortest(a));
    } else {
      if (s.sign == -1 && evidence(s, "points") == 256 && evidence(s, "max_value") < 0.0) ++negative;
      else o.fail("not negative on 256 points at a=" + shortest(a));
    }
  }
  if (zeros != 9 || negative != 11) o.fail("expected 9 zeros and 11 negative curves");
  if (o.pass)
    o.detail << zeros << " zeros (max residual " << shortest(worst) << ", second evaluator " << shortest(worst2)
             << "), " << negative << " negative curves";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto r = verify_theorem(Clause::T1_2_2);
  record_report(r, o);
  if (r.samples.size() != 1200) o.fail("expected 1200 samples, got " + std::to_string(r.samples.size()));
  if (o.pass) o.detail << r.summary;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const EvalConfig cfg = full_precision();
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto a_draw = [&] { return 1.0 - unit(rng); };  // (0, 1]
  double w1 = 0, w2 = 0, w3 = 0;
  for (int k = 0; k < 20; ++k) {
    const cplx s(1.5 + 2.5 * unit(rng), -10.0 + 20.0 * unit(rng));
    const double a = a_draw();
    const double d = std::abs(hurwitz_series(s, a, cfg).value - hurwitz_euler_maclaurin(s, a, -1, cfg).value);
    w1 = std::max(w1, d);
    if (!(d < 1e-12)) o.fail("series vs Euler-Maclaurin " + shortest(d) + " at s=" + shortest(s.real()) + "+" +
                             shortest(s.imag()) + "i, a=" + shortest(a));
  }
  for (int k = 0; k < 20; ++k) {
    const cplx s(0.02 + 0.96 * unit(rng), -10.0 + 20.0 * unit(rng));
    const double a = a_draw();
    const double d = std::abs(hurwitz_integral(s, a, cfg).value - hurwitz_euler_maclaurin(s, a, -1, cfg).value);
    w2 = std::max(w2, d);
    if (!(d < 1e-8)) o.fail("integral vs Euler-Maclaurin " + shortest(d) + " at s=" + shortest(s.real()) + "+" +
                            shortest(s.imag()) + "i, a=" + shortest(a));
  }
  for (int k = 0; k < 20; ++k) {
    const cplx s(1.05 + 1.95 * unit(rng), -10.0 + 20.0 * unit(rng));
    const double a = a_draw();
    cplx z;
    do {
      z = std::polar(std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    } while (std::abs(z - 1.0) < 0.05);
    if (k % 4 == 0) z /= std::abs(z);  // include the unit circle
    const double d = std::abs(lerch_series(s, a, z, cfg).value - lerch_integral(s, a, z, cfg).value);
    w3 = std::max(w3, d);
    if (!(d < 1e-10)) o.fail("Lerch series vs integral " + shortest(d) + " at s=" + shortest(s.real()) + "+" +
                             shortest(s.imag()) + "i, a=" + shortest(a));
  }
  if (o.pass)
    o.detail << "max differences " << shortest(w1) << ", " << shortest(w2) << ", " << shortest(w3) << " over 3x20 points";
  return o;
}

Outcome criterion4() {
  Outcome o;
  double worst = 0.0;
  for (double a : {0.1, 0.3, 0.5, 0.9}) {
    const double d = std::abs(hurwitz(1e-6, a).value - (0.5 - a));
    worst = std::max(worst, d);
    if (!(d < 1e-3)) o.fail("deviation " + shortest(d) + " at a=" + shortest(a));
  }
  if (o.pass) o.detail << "max deviation " << shortest(worst);
  return o;
}

Outcome criterion5() {
  Outcome o;
  const double z2 = std::pow(std::numbers::pi, 2) / 6.0;
  const double z4 = std::pow(std::numbers::pi, 4) / 90.0;
  const double exact = (z2 * z2 - z4) / 2.0;
  DoublePoint p;
  const cplx vals[] = {double_series(p).value, double_integral(p).value, ai_continuation(p).value};
  const char* names[] = {"series", "integral", "continuation"};
  double w1 = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double d = std::abs(vals[i] - exact);
    w1 = std::max(w1, d);
    if (!(d < 1e-7)) o.fail(std::string(names[i]) + " off by " + shortest(d) + " at (2,2,1)");
  }
  double w2 = 0.0;
  for (auto [s1, s2] : {std::pair{0.3, 1.4}, {0.5, 1.2}, {0.7, 1.2}}) {
    for (double a : {0.3, 0.7, 1.0}) {
      p.s1 = s1;
      p.s2 = s2;
      p.a = a;
      const cplx ai = ai_continuation(p).value;
      const cplx refl = double_strip(p, StripForm::Reflection).value;
      const cplx star = double_strip(p, StripForm::Starred).value;
      const double d = std::max({std::abs(refl - ai), std::abs(star - ai), std::abs(refl - star)});
      w2 = std::max(w2, d);
      if (!(d < 1e-6))
        o.fail("strip disagreement " + shortest(d) + " at (" + shortest(s1) + "," + shortest(s2) + "," + shortest(a) + ")");
    }
  }
  if (o.pass) o.detail << "max difference " << shortest(w1) << " at (2,2,1), " << shortest(w2) << " on the strip";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto r = verify_theorem(Clause::T1_4_1);
  record_report(r, o);
  for (const auto& s : r.samples) {
    const double a = param(s, "a");
    if (a < 0.5) {
      const double plus = evidence(s, "probe_plus"), minus = evidence(s, "probe_minus");
      if (!(plus > 1e3)) o.fail("probe_plus=" + shortest(plus) + " at a=" + shortest(a));
      if (!(minus < -1e3)) o.fail("probe_minus=" + shortest(minus) + " at a=" + shortest(a));
      if (!s.zero || !(s.zero->residual < 1e-8)) o.fail("no path zero with residual < 1e-8 at a=" + shortest(a));
    } else if (!(s.sign == -1 && evidence(s, "points") == 400)) {
      o.fail("not negative on the 20x20 grid at a=" + shortest(a));
    }
  }
  if (o.pass) o.detail << r.summary;
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t total = 0;
  for (Clause c : {Clause::T1_4_2, Clause::T1_4_3, Clause::T1_4_4}) {
    const auto r = verify_theorem(c);
    total += r.samples.size();
    record_report(r, o);
    for (const auto& s : r.samples)
      if (s.status == SampleStatus::Contradiction) o.fail(std::string("contradiction in ") + clause_id(c));
  }
  if (o.pass) o.detail << total << " samples, no contradictions";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto r = verify_theorem(Clause::P1_5);
  record_report(r, o);
  for (const auto& s : r.samples) {
    const double a = param(s, "a");
    if (!s.zero) { o.fail("no diagonal zero at a=" + shortest(a)); continue; }
    const double x = s.zero->location;
    if (!(x > 0.5 && x < 1.0 && s.zero->residual < 1e-9))
      o.fail("zero " + shortest(x) + " residual " + shortest(s.zero->residual) + " at a=" + shortest(a));
    if (!(evidence(s, "probe_0.5001") < 0.0 && evidence(s, "probe_0.999") > 0.0))
      o.fail("boundary probe signs wrong at a=" + shortest(a));
    if (o.pass) o.detail << (o.detail.tellp() > 0 ? ", " : "") << "a=" << shortest(a) << ": " << shortest(x);
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  double w2 = 0.0, wh = 0.0, wg = 0.0;
  std::size_t n2 = 0, nh = 0;
  for (int q : {3, 4, 5}) {
    for (const auto& c : check_relations(q, 2.0)) {
      ++n2;
      w2 = std::max(w2, c.residual);
      if (!(c.residual < 1e-9)) o.fail("q=" + std::to_string(q) + " s=2 " + c.label + ": " + shortest(c.residual));
    }
    for (const auto& c : check_relations(q, 0.5)) {
      ++nh;
      wh = std::max(wh, c.residual);
      if (!(c.residual < 1e-7)) o.fail("q=" + std::to_string(q) + " s=0.5 " + c.label + ": " + shortest(c.residual));
    }
    for (const auto& chi : all_characters(q)) {
      if (!chi.is_primitive || chi.is_principal()) continue;
      const double d = std::abs(std::abs(gauss_sum(chi, 1)) - std::sqrt(static_cast<double>(q)));
      wg = std::max(wg, d);
      if (!(d < 1e-12)) o.fail("|G| - sqrt(q) = " + shortest(d) + " at q=" + std::to_string(q));
    }
  }
  if (o.pass)
    o.detail << n2 << " checks at s=2 (max " << shortest(w2) << "), " << nh << " at s=0.5 (max " << shortest(wh)
             << "), Gauss sums within " << shortest(wg);
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto grid = kernel::log_grid();
  int neg = 0, change = 0;
  for (int k = 2; k <= 20; ++k) {
    const double a = k / 20.0;
    if (k > 9 && k % 2 == 1) continue;  // 0.5, 0.6, ..., 1.0 above one half
    const auto c = kernel::negativity_certificate(a, grid);
    if (a >= 0.5) {
      if (c.verdict == kernel::Verdict::NegativeDefiniteEvidence && c.inequality_holds) ++neg;
      else o.fail(std::string(kernel::verdict_name(c.verdict)) + " at a=" + shortest(a));
    } else {
      if (c.verdict == kernel::Verdict::SignChangeFound) ++change;
      else o.fail(std::string(kernel::verdict_name(c.verdict)) + " at a=" + shortest(a));
    }
  }
  if (o.pass) o.detail << neg << " negative certificates, " << change << " sign changes on " << grid.size() << " points";
  return o;
}

Outcome criterion11() {
  Outcome o;
  const EvalConfig cfg = full_precision();
  std::mt19937_64 rng(1729);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const cplx s1(1.2 + 1.8 * unit(rng), -5.0 + 10.0 * unit(rng));
    const cplx s2(1.2 + 1.8 * unit(rng), -5.0 + 10.0 * unit(rng));
    const double a = 1.0 - unit(rng);
    const double r = harmonic_product_check(s1, s2, a, cfg);
    worst = std::max(worst, r);
    if (!(r < 1e-8)) {
      const double size = std::abs(hurwitz_series(s1, a, cfg).value * hurwitz_series(s2, a, cfg).value);
      o.fail("residual " + shortest(r) + " at a=" + shortest(a) + " where |zeta(s1,a) zeta(s2,a)| = " + shortest(size));
    }
  }
  if (o.pass) o.detail << "max residual " << shortest(worst) << " over 50 points";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"Hurwitz zeros for a < 1/2, negativity for a >= 1/2", criterion1},
      {"Lerch nonvanishing on the 10x10x12 grid", criterion2},
      {"cross-method agreement of single zeta evaluators", criterion3},
      {"zeta(1e-6, a) close to 1/2 - a", criterion4},
      {"double zeta cross-validation", criterion5},
      {"double zeta negativity, divergence probes and path zeros", criterion6},
      {"twisted double zeta nonvanishing", criterion7},
      {"diagonal zeros of zeta2(s, s; a)", criterion8},
      {"L / Hurwitz / polylog relations and Gauss sums", criterion9},
      {"kernel negativity certificates", criterion10},
      {"harmonic product residual", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s %2zu  %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
