#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lerchzeta/types.hpp"
#include "lerchzeta/zeros/zeros.hpp"

namespace lerchzeta {

enum class Clause { T1_2_1, T1_2_2, T1_4_1, T1_4_2, T1_4_3, T1_4_4, P1_5 };

const char* clause_id(Clause c);  // "T1.2-1", ...
std::optional<Clause> parse_clause(const std::string& id);
const std::vector<Clause>& all_clauses();

enum class VerdictKind { ZeroFound, SignConstant, ImNonvanishing, RePositive };
const char* verdict_kind_name(VerdictKind k);

enum class SampleStatus {
  Pass,
  Contradiction,    // the computed value contradicts the clause
  ProbeShortfall,   // divergence probe has the right sign but not the required magnitude
  EvaluationError,  // an evaluator refused or did not converge
};
const char* sample_status_name(SampleStatus s);

using NamedValues = std::vector<std::pair<std::string, double>>;

struct SampleVerdict {
  NamedValues params;
  VerdictKind kind = VerdictKind::SignConstant;
  int sign = 0;  // for SignConstant and ImNonvanishing
  std::optional<ZeroRecord> zero;
  cplx value{};
  double error = 0.0;
  NamedValues evidence;  // probes, extrema, ...
  SampleStatus status = SampleStatus::Pass;
  std::string error_class;  // "domain" / "nonconvergence" for EvaluationError
  std::string detail;
};

struct TheoremReport {
  Clause clause = Clause::T1_2_1;
  std::vector<SampleVerdict> samples;
  bool pass = false;
  std::string summary;
};

/// Empty members fall back to the clause's standard grid.
struct GridSpec {
  std::vector<double> a_values;
  std::vector<std::pair<double, double>> sigma_pairs;  // T1.4-2/3/4
  std::vector<cplx> z_values;                          // T1.2-2 and T1.4-2/3/4
  int sigma_points = 0;                                // per-axis resolution
  double epsilon = 1e-3;                               // T1.4-1 probes
  double divergence_threshold = 1e3;
};

struct VerifyConfig {
  ZeroConfig zero;
  EvalConfig eval;
  int jobs = 1;
};

TheoremReport verify_theorem(Clause clause, const GridSpec& grid = {}, const VerifyConfig& cfg = {});

}  // namespace lerchzeta
