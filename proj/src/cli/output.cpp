#include "output.hpp"

#include "lerchzeta/format.hpp"

#include <cmath>

namespace lerchzeta::cli {
namespace {

std::string num(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  return shortest(x);
}

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json complex(const cplx& z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

template <class T>
json opt_complex(const std::optional<T>& z) {
  return z ? complex(*z) : json(nullptr);
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void header(std::ostream& os, const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
}

void row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
  os << "\n";
}

std::string params_text(const NamedValues& v) {
  std::string s;
  for (const auto& [k, x] : v) s += (s.empty() ? "" : ";") + k + "=" + num(x);
  return s;
}

}  // namespace

int sign_of(const EvalRecord& r) {
  if (!r.ok) return 0;
  return (r.value.real() > 0.0) - (r.value.real() < 0.0);
}

const std::vector<std::string> kEvalColumns = {
    "function", "method", "s1_re", "s1_im", "s2_re", "s2_im", "a", "z1_re", "z1_im", "z2_re", "z2_im",
    "q", "character", "value_re", "value_im", "err_estimate", "sign", "status", "message"};

const std::vector<std::string> kZeroColumns = {"context",  "a",          "location",      "location2",
                                               "lo",       "hi",         "residual",      "method",
                                               "iterations", "second_method", "second_residual"};

const std::vector<std::string> kVerifyColumns = {"clause", "index",        "params",        "verdict",
                                                 "sign",   "status",       "value_re",      "value_im",
                                                 "err_estimate", "zero_location", "zero_residual", "detail"};

json to_json(const EvalRecord& r) {
  json j;
  j["function"] = r.function;
  j["method"] = r.method;
  j["s1"] = complex(r.s1);
  j["s2"] = opt_complex(r.s2);
  j["a"] = r.a ? number(*r.a) : json(nullptr);
  j["z1"] = opt_complex(r.z1);
  j["z2"] = opt_complex(r.z2);
  j["q"] = r.q ? json(*r.q) : json(nullptr);
  j["character"] = r.character ? json(*r.character) : json(nullptr);
  j["value"] = r.ok ? complex(r.value) : json(nullptr);
  j["err_estimate"] = r.ok ? number(r.error) : json(nullptr);
  j["sign"] = sign_of(r);
  j["status"] = r.ok ? "ok" : "error";
  j["message"] = r.message;
  return j;
}

json to_json(const ZeroRecord& r) {
  json j;
  j["context"] = r.context;
  j["a"] = r.a;
  j["location"] = r.location;
  j["location2"] = number(r.location2);
  j["bracket"] = {r.lo, r.hi};
  j["residual"] = r.residual;
  j["method"] = r.method;
  j["iterations"] = r.iterations;
  j["second_method"] = r.second_method;
  j["second_residual"] = number(r.second_residual);
  return j;
}

json to_json(const TheoremReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    json p = json::object();
    for (const auto& [k, x] : s.params) p[k] = x;
    json e = json::object();
    for (const auto& [k, x] : s.evidence) e[k] = number(x);
    json j;
    j["params"] = p;
    j["verdict"] = verdict_kind_name(s.kind);
    j["sign"] = s.sign;
    j["status"] = sample_status_name(s.status);
    j["value"] = complex(s.value);
    j["err_estimate"] = number(s.error);
    j["zero"] = s.zero ? to_json(*s.zero) : json(nullptr);
    j["evidence"] = e;
    j["error_class"] = s.error_class;
    j["detail"] = s.detail;
    samples.push_back(j);
  }
  json j;
  j["clause"] = clause_id(r.clause);
  j["pass"] = r.pass;
  j["summary"] = r.summary;
  j["samples"] = samples;
  return j;
}

void write_csv(std::ostream& os, const std::vector<EvalRecord>& rows) {
  header(os, kEvalColumns);
  auto c = [](const std::optional<cplx>& z, bool im) { return z ? num(im ? z->imag() : z->real()) : ""; };
  for (const auto& r : rows) {
    row(os, {r.function, r.method, num(r.s1.real()), num(r.s1.imag()), c(r.s2, false), c(r.s2, true),
             r.a ? num(*r.a) : "", c(r.z1, false), c(r.z1, true), c(r.z2, false), c(r.z2, true),
             r.q ? std::to_string(*r.q) : "", r.character ? std::to_string(*r.character) : "",
             r.ok ? num(r.value.real()) : "", r.ok ? num(r.value.imag()) : "", r.ok ? num(r.error) : "",
             std::to_string(sign_of(r)), r.ok ? "ok" : "error", r.message});
  }
}

void write_csv(std::ostream& os, const std::vector<ZeroRecord>& rows) {
  header(os, kZeroColumns);
  for (const auto& r : rows) {
    row(os, {r.context, num(r.a), num(r.location), std::isnan(r.location2) ? "" : num(r.location2), num(r.lo),
             num(r.hi), num(r.residual), r.method, std::to_string(r.iterations), r.second_method,
             std::isnan(r.second_residual) ? "" : num(r.second_residual)});
  }
}

void write_csv(std::ostream& os, const std::vector<TheoremReport>& reports) {
  header(os, kVerifyColumns);
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
      const auto& s = r.samples[i];
      row(os, {clause_id(r.clause), std::to_string(i), params_text(s.params), verdict_kind_name(s.kind),
               std::to_string(s.sign), sample_status_name(s.status), num(s.value.real()), num(s.value.imag()),
               num(s.error), s.zero ? num(s.zero->location) : "", s.zero ? num(s.zero->residual) : "", s.detail});
    }
  }
}

}  // namespace lerchzeta::cli
