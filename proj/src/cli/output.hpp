#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lerchzeta/types.hpp"
#include "lerchzeta/zeros/theorem.hpp"
#include "lerchzeta/zeros/zeros.hpp"

namespace lerchzeta::cli {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv };

/// One evaluated point. Absent coordinates stay empty in CSV and null in JSON.
struct EvalRecord {
  std::string function;
  std::string method;
  cplx s1;
  std::optional<cplx> s2;
  std::optional<double> a;
  std::optional<cplx> z1;
  std::optional<cplx> z2;
  std::optional<int> q;
  std::optional<int> character;
  cplx value;
  double error = 0.0;
  bool ok = true;
  std::string message;
};

int sign_of(const EvalRecord& r);

json to_json(const EvalRecord& r);
json to_json(const ZeroRecord& r);
json to_json(const TheoremReport& r);

extern const std::vector<std::string> kEvalColumns;
extern const std::vector<std::string> kZeroColumns;
extern const std::vector<std::string> kVerifyColumns;

void write_csv(std::ostream& os, const std::vector<EvalRecord>& rows);
void write_csv(std::ostream& os, const std::vector<ZeroRecord>& rows);
void write_csv(std::ostream& os, const std::vector<TheoremReport>& reports);

}  // namespace lerchzeta::cli
