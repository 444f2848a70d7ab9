#include "lerchzeta/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lerchzeta/errors.hpp"
#include "lerchzeta/format.hpp"
#include "lerchzeta/zeros/parallel.hpp"
#include "lerchzeta/zeta_double/double_zeta.hpp"
#include "lerchzeta/zeta_single/dirichlet.hpp"
#include "lerchzeta/zeta_single/hurwitz.hpp"
#include "lerchzeta/zeta_single/lerch.hpp"
#include "output.hpp"

namespace lerchzeta::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPoleBuffer = 1e-3;

struct Common {
  std::string format = "json";
  std::string out_path;
  int jobs = 1;
  EvalConfig eval;
  ZeroConfig zero;
};

struct PointArgs {
  std::string function;
  std::string method = "auto";
  double sigma = kNaN, t = 0.0;
  double s1 = kNaN, t1 = 0.0, s2 = kNaN, t2 = 0.0;
  double a = 1.0;
  double z_re = kNaN, z_im = 0.0;
  double z1_re = 1.0, z1_im = 0.0, z2_re = 1.0, z2_im = 0.0;
  int q = 0, character = 0;
  int l = -1;
};

struct SweepArgs {
  double sigma_min = kNaN, sigma_max = kNaN;
  double s1_min = kNaN, s1_max = kNaN, s2_min = kNaN, s2_max = kNaN;
  int points = 99;
  std::string region;
};

const std::vector<std::string> kFunctions = {"hurwitz", "lerch", "polylog", "dirichlet-l", "double", "double-diagonal"};

const std::map<std::string, std::vector<std::string>> kMethods = {
    {"hurwitz", {"auto", "series", "euler-maclaurin", "regularized", "continued", "integral-strip"}},
    {"lerch", {"auto", "series", "integral"}},
    {"polylog", {"auto"}},
    {"dirichlet-l", {"auto", "direct", "hurwitz", "polylog"}},
    {"double", {"auto", "series", "integral", "strip", "strip-reflection", "continuation"}},
    {"double-diagonal", {"auto", "diagonal-identity"}},
};

int default_jobs() {
  if (const char* env = std::getenv("LERCH_ZEROS_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void check_method(const PointArgs& p) {
  const auto& allowed = kMethods.at(p.function);
  if (std::find(allowed.begin(), allowed.end(), p.method) == allowed.end()) {
    std::string list;
    for (const auto& m : allowed) list += (list.empty() ? "" : ", ") + m;
    throw DomainError("method '" + p.method + "' is not available for " + p.function + " (choose one of " + list + ")");
  }
}

const char* double_method(DoubleRegion r) {
  switch (r) {
    case DoubleRegion::SeriesAbs: return "series";
    case DoubleRegion::Case2:
    case DoubleRegion::Case3:
    case DoubleRegion::Case4: return "integral";
    case DoubleRegion::Strip1:
    case DoubleRegion::AiContinued: return "continuation";
    case DoubleRegion::Outside: break;
  }
  return "none";
}

// Evaluates one point; evaluator exceptions propagate.
EvalRecord evaluate(const PointArgs& p, const EvalConfig& cfg) {
  check_method(p);
  EvalRecord r;
  r.function = p.function;
  r.method = p.method;
  const cplx s(p.sigma, p.t);
  Estimate e;
  if (p.function == "double") {
    require(std::isfinite(p.s1) && std::isfinite(p.s2), "double needs --s1 and --s2");
    DoublePoint d;
    d.s1 = cplx(p.s1, p.t1);
    d.s2 = cplx(p.s2, p.t2);
    d.a = p.a;
    d.z1 = cplx(p.z1_re, p.z1_im);
    d.z2 = cplx(p.z2_re, p.z2_im);
    r.s1 = d.s1;
    r.s2 = d.s2;
    r.a = p.a;
    r.z1 = d.z1;
    r.z2 = d.z2;
    d.validate();
    std::string m = p.method;
    if (m == "auto") m = double_method(d.region());
    if (m == "series") e = double_series(d, cfg);
    else if (m == "integral") e = double_integral(d, cfg);
    else if (m == "strip") e = double_strip(d, StripForm::Starred, cfg);
    else if (m == "strip-reflection") e = double_strip(d, StripForm::Reflection, cfg);
    else if (m == "continuation") e = ai_continuation(d, {p.l}, cfg);
    else throw DomainError("double: no representation covers this point (" + std::string(region_name(d.region())) + ")");
    r.method = m;
  } else {
    require(std::isfinite(p.sigma), p.function + " needs --sigma");
    r.s1 = s;
    if (p.function == "hurwitz") {
      r.a = p.a;
      std::string m = p.method;
      if (m == "auto") m = s.real() <= 0.0 ? "continued" : method_name(resolve_method(HurwitzMethod::Automatic, s, p.a));
      if (m == "series") e = hurwitz_series(s, p.a, cfg);
      else if (m == "euler-maclaurin") e = hurwitz_euler_maclaurin(s, p.a, -1, cfg);
      else if (m == "regularized") e = hurwitz_regularized(s, p.a, -1, cfg);
      else if (m == "continued") e = hurwitz_continued(s, p.a, cfg);
      else e = hurwitz_integral(s, p.a, cfg);
      r.method = m;
    } else if (p.function == "lerch" || p.function == "polylog") {
      require(std::isfinite(p.z_re), p.function + " needs --z-re (and optionally --z-im)");
      const cplx z(p.z_re, p.z_im);
      r.z1 = z;
      if (p.function == "polylog") {
        e = polylog(s, z, cfg);
        r.method = "polylog";
      } else {
        r.a = p.a;
        std::string m = p.method;
        if (m == "auto") m = (s.real() > 1.0 || std::abs(z) < 1.0 - 1e-12) ? "series" : "integral";
        e = m == "series" ? lerch_series(s, p.a, z, cfg) : lerch_integral(s, p.a, z, cfg);
        r.method = m;
      }
    } else if (p.function == "dirichlet-l") {
      require(p.q >= 1 && p.q <= 12, "dirichlet-l needs --q in 1..12");
      const auto chars = all_characters(p.q);
      require(p.character >= 0 && p.character < static_cast<int>(chars.size()),
              "dirichlet-l: --character must lie in 0.." + std::to_string(chars.size() - 1));
      const auto& chi = chars[p.character];
      r.q = p.q;
      r.character = p.character;
      std::string m = p.method;
      if (m == "auto") m = s.real() > 1.0 ? "direct" : "hurwitz";
      if (m == "direct") e = dirichlet_l_direct(s, chi, cfg);
      else if (m == "hurwitz") e = dirichlet_l_via_hurwitz(s, chi, cfg);
      else e = dirichlet_l_via_polylog(s, chi, cfg);
      r.method = m;
    } else {  // double-diagonal
      r.s2 = s;
      r.a = p.a;
      e = diagonal_identity(s, p.a, cfg);
      r.method = "diagonal-identity";
    }
  }
  r.value = e.value;
  r.error = e.error;
  return r;
}

// Record for a point whose evaluation failed, with the coordinates filled in.
EvalRecord failed(const PointArgs& p, const std::string& message) {
  EvalRecord r;
  r.function = p.function;
  r.method = p.method;
  r.ok = false;
  r.message = message;
  if (p.function == "double") {
    r.s1 = cplx(p.s1, p.t1);
    r.s2 = cplx(p.s2, p.t2);
    r.z1 = cplx(p.z1_re, p.z1_im);
    r.z2 = cplx(p.z2_re, p.z2_im);
    r.a = p.a;
  } else {
    r.s1 = cplx(p.sigma, p.t);
    if (p.function != "polylog" && p.function != "dirichlet-l") r.a = p.a;
    if (p.function == "lerch" || p.function == "polylog") r.z1 = cplx(p.z_re, p.z_im);
    if (p.function == "dirichlet-l") r.q = p.q, r.character = p.character;
    if (p.function == "double-diagonal") r.s2 = r.s1;
  }
  return r;
}

std::vector<double> interior(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * (i + 1) / (n + 1);
  return v;
}

std::vector<double> inclusive(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  if (n > 1) v.back() = hi;
  return v;
}

class Output {
 public:
  Output(const Common& c, std::ostream& fallback) : format_(c.format == "csv" ? Format::Csv : Format::Json) {
    if (!c.out_path.empty()) {
      file_.open(c.out_path);
      if (!file_) throw DomainError("cannot open output file " + c.out_path);
    }
    os_ = c.out_path.empty() ? &fallback : &file_;
  }
  std::ostream& os() { return *os_; }
  Format format() const { return format_; }
  void json_doc(const json& j) { *os_ << j.dump(2) << "\n"; }

 private:
  Format format_;
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

int cmd_eval(const PointArgs& p, const Common& c, std::ostream& out) {
  const EvalRecord r = evaluate(p, c.eval);
  Output o(c, out);
  if (o.format() == Format::Csv) write_csv(o.os(), std::vector<EvalRecord>{r});
  else o.json_doc(to_json(r));
  return kOk;
}

int cmd_sweep(const PointArgs& base, const SweepArgs& sw, const Common& c, std::ostream& out, std::ostream& err) {
  check_method(base);
  std::vector<PointArgs> grid;
  if (base.function == "double") {
    if (sw.region == "strip") {
      // 0 < s1 < 1, s2 > 1, 1 < s1 + s2 < 2 with the pole buffer
      for (int i = 0; i < sw.points; ++i) {
        const double s1 = (i + 0.5) / sw.points;
        for (double s2 : inclusive(1.0 + kPoleBuffer, 2.0 - s1 - kPoleBuffer, sw.points)) {
          PointArgs p = base;
          p.s1 = s1;
          p.s2 = s2;
          grid.push_back(p);
        }
      }
    } else {
      require(sw.region.empty(), "sweep double: --region accepts only 'strip'");
      require(std::isfinite(sw.s1_min) && std::isfinite(sw.s1_max) && std::isfinite(sw.s2_min) && std::isfinite(sw.s2_max),
              "sweep double needs --region strip or --s1-min/--s1-max/--s2-min/--s2-max");
      for (double s1 : interior(sw.s1_min, sw.s1_max, sw.points)) {
        for (double s2 : interior(sw.s2_min, sw.s2_max, sw.points)) {
          PointArgs p = base;
          p.s1 = s1;
          p.s2 = s2;
          grid.push_back(p);
        }
      }
    }
  } else {
    const double lo = std::isfinite(sw.sigma_min) ? sw.sigma_min : 0.0;
    const double hi = std::isfinite(sw.sigma_max) ? sw.sigma_max : 1.0;
    require(hi > lo, "sweep: needs --sigma-min < --sigma-max");
    for (double s : interior(lo, hi, sw.points)) {
      PointArgs p = base;
      p.sigma = s;
      grid.push_back(p);
    }
  }
  require(sw.points >= 1, "sweep: --points must be positive");

  std::vector<EvalRecord> rows(grid.size());
  std::vector<int> codes(grid.size(), kOk);
  parallel_for(grid.size(), c.jobs, [&](std::size_t i) {
    try {
      rows[i] = evaluate(grid[i], c.eval);
    } catch (const DomainError& e) {
      rows[i] = failed(grid[i], e.what());
      codes[i] = kDomain;
    } catch (const NonConvergence& e) {
      rows[i] = failed(grid[i], e.what());
      codes[i] = kNonConvergence;
    }
  });

  Output o(c, out);
  if (o.format() == Format::Csv) {
    write_csv(o.os(), rows);
  } else {
    json j;
    j["function"] = base.function;
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back(to_json(r));
    o.json_doc(j);
  }
  std::size_t bad = 0;
  int code = kOk;
  for (int k : codes) {
    if (k != kOk) {
      ++bad;
      if (code == kOk) code = k;
    }
  }
  if (bad > 0) err << bad << " of " << rows.size() << " rows failed\n";
  return 10 * bad > rows.size() ? code : kOk;
}

int cmd_zeros(const std::string& target, double a_min, double a_max, int steps, double a, const Common& c,
              std::ostream& out, std::ostream& err) {
  std::vector<ZeroRecord> records;
  std::vector<std::size_t> jumps;
  if (target == "hurwitz") {
    require(std::isfinite(a_min) && std::isfinite(a_max) && steps >= 1, "zeros hurwitz needs --a-min, --a-max, --steps");
    require(a_min > 0.0 && a_max <= 1.0 && a_min <= a_max, "zeros hurwitz: needs 0 < a-min <= a-max <= 1");
    auto as = inclusive(a_min, a_max, steps);
    for (double& x : as) x = std::round(x * 1e12) / 1e12;  // 0.15, not 0.15000000000000002
    std::vector<double> below;
    for (double x : as) {
      if (x < 0.5) {
        below.push_back(x);
        continue;
      }
      // no zero is possible for a >= 1/2; a sign change here contradicts that
      const auto br = bracket_scan([&](double s) { return hurwitz(s, x, HurwitzMethod::IntegralStrip, c.eval).value.real(); },
                                   0.01, 0.99, 256, c.zero);
      if (!br.empty()) {
        throw TheoremContradiction("sign change of zeta(sigma, " + shortest(x) + ") in [" + shortest(br[0].lo) +
                                   ", " + shortest(br[0].hi) + "] although a >= 1/2");
      }
    }
    records = hurwitz_zero_curve(below, c.zero, c.eval, c.jobs);
    jumps = curve_jumps(records);
  } else {
    require(std::isfinite(a), "zeros double-diagonal needs --a");
    records = diagonal_zeros(a, c.zero, c.eval);
    if (records.empty()) throw TheoremContradiction("no diagonal zero of zeta2(sigma, sigma; a) found in (1/2, 1)");
  }

  Output o(c, out);
  if (o.format() == Format::Csv) {
    write_csv(o.os(), records);
  } else {
    json j;
    j["target"] = target;
    j["records"] = json::array();
    for (const auto& r : records) j["records"].push_back(to_json(r));
    j["flagged_jumps"] = jumps;
    o.json_doc(j);
  }
  if (records.empty()) err << "no zeros (theorem-consistent)\n";
  for (std::size_t i : jumps) {
    err << "note: zero curve jumps by more than 0.2 between a = " << records[i].a << " and a = " << records[i + 1].a << "\n";
  }
  return kOk;
}

int cmd_verify(const std::vector<std::string>& clauses, const GridSpec& grid, const Common& c, std::ostream& out,
               std::ostream& err) {
  std::vector<Clause> todo;
  for (const auto& id : clauses) {
    if (id == "all") {
      todo = all_clauses();
      break;
    }
    const auto cl = parse_clause(id);
    require(cl.has_value(), "unknown clause '" + id + "'");
    todo.push_back(*cl);
  }
  if (todo.empty()) todo = all_clauses();

  VerifyConfig vc;
  vc.eval = c.eval;
  vc.zero = c.zero;
  vc.jobs = c.jobs;
  std::vector<TheoremReport> reports;
  for (Clause cl : todo) reports.push_back(verify_theorem(cl, grid, vc));

  Output o(c, out);
  bool all_pass = true;
  if (o.format() == Format::Csv) {
    write_csv(o.os(), reports);
  } else {
    json j;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    j["pass"] = all_pass;
    o.json_doc(j);
  }

  int code = kOk;
  auto raise = [&](int k) {
    if (code == kOk || k == kContradiction) code = k;
  };
  for (const auto& r : reports) {
    err << r.summary << "\n";
    for (const auto& s : r.samples) {
      if (s.status == SampleStatus::Pass) continue;
      std::ostringstream repro;
      repro << "lerchzeta verify --clause " << clause_id(r.clause);
      for (const auto& [k, x] : s.params) {
        if (k == "a") repro << " --a " << shortest(x);
      }
      err << "  " << sample_status_name(s.status) << ": " << s.detail << "\n    reproduce: " << repro.str() << "\n";
      if (s.status == SampleStatus::EvaluationError) raise(s.error_class == "domain" ? kDomain : kNonConvergence);
      else raise(kContradiction);
    }
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz, Lerch and double zeta evaluation, zero location and verification grids", "lerchzeta"};
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  c.jobs = default_jobs();
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", c.out_path, "write results to FILE instead of stdout");
  app.add_option("--jobs", c.jobs, "worker threads (default: LERCH_ZEROS_JOBS or 1)")->check(CLI::Range(1, 1024));
  app.add_option("--rel-tol", c.eval.rel_tol, "relative tolerance")->check(CLI::PositiveNumber);
  app.add_option("--abs-tol", c.eval.abs_tol, "absolute tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-depth", c.eval.max_depth, "quadrature refinement cap")->check(CLI::Range(3, 20));
  app.add_option("--zero-tol", c.zero.zero_tol, "residual required at a located zero")->check(CLI::PositiveNumber);

  PointArgs p;
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("function", p.function, "function")->required()->check(CLI::IsMember(kFunctions));
    sub->add_option("--method", p.method, "evaluator (default: chosen by domain)");
    sub->add_option("--sigma", p.sigma, "Re(s)");
    sub->add_option("--t", p.t, "Im(s)");
    sub->add_option("--s1", p.s1, "Re(s1)");
    sub->add_option("--t1", p.t1, "Im(s1)");
    sub->add_option("--s2", p.s2, "Re(s2)");
    sub->add_option("--t2", p.t2, "Im(s2)");
    sub->add_option("--a", p.a, "shift a (default 1)");
    sub->add_option("--z-re", p.z_re, "Re(z)");
    sub->add_option("--z-im", p.z_im, "Im(z)");
    sub->add_option("--z1-re", p.z1_re, "Re(z1) (default 1)");
    sub->add_option("--z1-im", p.z1_im, "Im(z1)");
    sub->add_option("--z2-re", p.z2_re, "Re(z2) (default 1)");
    sub->add_option("--z2-im", p.z2_im, "Im(z2)");
    sub->add_option("--q", p.q, "modulus for dirichlet-l");
    sub->add_option("--character", p.character, "character index mod q (0 = principal)");
    sub->add_option("--l", p.l, "remainder order for the continuation (default by region)");
  };

  auto* eval = app.add_subcommand("eval", "evaluate one point");
  add_point(eval);

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "evaluate a grid; one row per point");
  add_point(sweep);
  sweep->add_option("--sigma-min", sw.sigma_min, "lower end of the sigma range (default 0)");
  sweep->add_option("--sigma-max", sw.sigma_max, "upper end of the sigma range (default 1)");
  sweep->add_option("--s1-min", sw.s1_min, "Re(s1) range for a rectangular double sweep");
  sweep->add_option("--s1-max", sw.s1_max, "upper end of the Re(s1) range");
  sweep->add_option("--s2-min", sw.s2_min, "lower end of the Re(s2) range");
  sweep->add_option("--s2-max", sw.s2_max, "upper end of the Re(s2) range");
  sweep->add_option("--points", sw.points, "interior points per axis")->check(CLI::Range(1, 100000));
  sweep->add_option("--region", sw.region, "'strip': 0<s1<1, s2>1, 1<s1+s2<2 (double only)");

  std::string target;
  double a_min = kNaN, a_max = kNaN, a_single = kNaN;
  int steps = 0;
  auto* zeros = app.add_subcommand("zeros", "locate real zeros");
  zeros->add_option("target", target, "hurwitz | double-diagonal")->required()->check(CLI::IsMember({"hurwitz", "double-diagonal"}));
  zeros->add_option("--a-min", a_min, "first a of the hurwitz grid");
  zeros->add_option("--a-max", a_max, "last a of the hurwitz grid");
  zeros->add_option("--steps", steps, "number of a values, endpoints included")->check(CLI::Range(1, 100000));
  zeros->add_option("--a", a_single, "shift for double-diagonal");

  std::vector<std::string> clauses;
  GridSpec grid;
  auto* verify = app.add_subcommand("verify", "run the theorem verification grids");
  verify->add_option("--clause", clauses, "T1.2-1 T1.2-2 T1.4-1 T1.4-2 T1.4-3 T1.4-4 P1.5 or all (default all)");
  verify->add_option("--a", grid.a_values, "override the a grid");
  verify->add_option("--sigma-points", grid.sigma_points, "override the per-axis resolution")->check(CLI::Range(1, 10000));
  verify->add_option("--epsilon", grid.epsilon, "divergence probe offset")->check(CLI::PositiveNumber);
  verify->add_option("--threshold", grid.divergence_threshold, "divergence probe magnitude")->check(CLI::PositiveNumber);

  const auto t0 = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (*eval) code = cmd_eval(p, c, out);
    else if (*sweep) code = cmd_sweep(p, sw, c, out, err);
    else if (*zeros) code = cmd_zeros(target, a_min, a_max, steps, a_single, c, out, err);
    else code = cmd_verify(clauses, grid, c, out, err);
  } catch (const CLI::ParseError& e) {
    const int k = app.exit(e, out, err);
    return k == 0 ? kOk : kDomain;
  } catch (const TheoremContradiction& e) {
    err << "theorem contradiction: " << e.what() << "\n";
    return kContradiction;
  } catch (const DomainError& e) {
    err << "domain refusal: " << e.what() << "\n";
    return kDomain;
  } catch (const NonConvergence& e) {
    err << "nonconvergence: " << e.what() << "\n";
    return kNonConvergence;
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "time: " << dt << " s\n";
  return code;
}

}  // namespace lerchzeta::cli
