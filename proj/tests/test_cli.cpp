#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"
#include "lerchzeta/cli/cli.hpp"

using lerchzeta::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::stringstream ss(text);
  std::string l;
  while (std::getline(ss, l)) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("eval prints a JSON record") {
  const auto r = call({"eval", "hurwitz", "--sigma", "0.5", "--a", "0.7"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["function"] == "hurwitz");
  CHECK(j["method"] == "integral-strip");
  CHECK(j["s1"]["re"].get<double>() == 0.5);
  CHECK(j["s2"].is_null());
  CHECK(j["a"].get<double>() == 0.7);
  CHECK(std::abs(j["value"]["re"].get<double>() - -1.0105365599351248) < 1e-12);
  CHECK(j["err_estimate"].is_number());
  CHECK(j["sign"] == -1);
  CHECK(j["status"] == "ok");
  CHECK(r.err.find("time: ") != std::string::npos);
}

TEST_CASE("eval of the double zeta and the diagonal") {
  auto r = call({"eval", "double", "--s1", "2", "--s2", "2"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["method"] == "series");
  CHECK(std::abs(j["value"]["re"].get<double>() - 0.8117424252833536) < 1e-13);

  r = call({"eval", "double", "--s1", "0.5", "--s2", "1.2", "--a", "0.7", "--method", "strip"});
  REQUIRE(r.code == 0);
  const double strip = Json::parse(r.out)["value"]["re"].get<double>();
  r = call({"eval", "double", "--s1", "0.5", "--s2", "1.2", "--a", "0.7"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["method"] == "continuation");
  CHECK(std::abs(j["value"]["re"].get<double>() - strip) < 1e-9);

  r = call({"eval", "double-diagonal", "--sigma", "0.6268175537729972", "--a", "1"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(Json::parse(r.out)["value"]["re"].get<double>()) < 1e-9);
}

TEST_CASE("csv output has the documented columns") {
  auto r = call({"eval", "lerch", "--sigma", "0.5", "--a", "0.3", "--z-re", "-1", "--format", "csv"});
  REQUIRE(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] ==
        "function,method,s1_re,s1_im,s2_re,s2_im,a,z1_re,z1_im,z2_re,z2_im,q,character,value_re,value_im,"
        "err_estimate,sign,status,message");
  const auto cells = split_line(rows[1]);
  REQUIRE(cells.size() == 19);
  CHECK(cells[0] == "lerch");
  CHECK(cells[1] == "integral");
  CHECK(cells[6] == "0.3");
  CHECK(cells[16] == "1");
  CHECK(cells[17] == "ok");

  r = call({"zeros", "hurwitz", "--a-min", "0.1", "--a-max", "0.3", "--steps", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "context,a,location,location2,lo,hi,residual,method,iterations,second_method,second_residual");
  CHECK(split_line(rows[2])[1] == "0.2");

  r = call({"verify", "--clause", "P1.5", "--format", "csv"});
  REQUIRE(r.code == 0);
  rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] ==
        "clause,index,params,verdict,sign,status,value_re,value_im,err_estimate,zero_location,zero_residual,detail");
}

TEST_CASE("sweep rows") {
  const auto r = call({"sweep", "hurwitz", "--a", "0.3", "--points", "9"});
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["function"] == "hurwitz");
  const Json& j = doc["rows"];
  REQUIRE(j.size() == 9);
  CHECK(j[0]["s1"]["re"].get<double>() == doctest::Approx(0.1));
  int changes = 0;
  for (std::size_t i = 1; i < j.size(); ++i) changes += j[i]["sign"] != j[i - 1]["sign"];
  CHECK(changes == 1);  // the zero near 0.506
}

TEST_CASE("zeros output") {
  auto r = call({"zeros", "hurwitz", "--a-min", "0.25", "--a-max", "0.25", "--steps", "1"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["target"] == "hurwitz");
  REQUIRE(j["records"].size() == 1);
  const auto& rec = j["records"][0];
  CHECK(std::abs(rec["location"].get<double>() - 0.61081855787533761982) < 1e-11);
  CHECK(rec["residual"].get<double>() < 1e-10);
  CHECK(rec["location2"].is_null());
  CHECK(rec["second_method"].is_string());
  CHECK(j["flagged_jumps"].is_array());

  r = call({"zeros", "hurwitz", "--a-min", "0.6", "--a-max", "0.9", "--steps", "4"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["records"].empty());
  CHECK(r.err.find("no zeros (theorem-consistent)") != std::string::npos);

  r = call({"zeros", "double-diagonal", "--a", "0.7"});
  REQUIRE(r.code == 0);
  j = Json::parse(r.out);
  REQUIRE(j["records"].size() == 1);
  CHECK(std::abs(j["records"][0]["location"].get<double>() - 0.67922686444870847796) < 1e-10);
}

TEST_CASE("verify output and exit codes") {
  auto r = call({"verify", "--clause", "P1.5"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  REQUIRE(j["reports"].size() == 1);
  CHECK(j["reports"][0]["clause"] == "P1.5");
  CHECK(j["reports"][0]["samples"].size() == 3);

  r = call({"verify", "--clause", "T1.4-1", "--a", "0.3"});
  CHECK(r.code == lerchzeta::cli::kContradiction);
  j = Json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK(j["reports"][0]["samples"][0]["status"] == "probe-shortfall");
  CHECK(r.err.find("reproduce: lerchzeta verify --clause T1.4-1 --a 0.3\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({"eval", "hurwitz", "--sigma", "1", "--a", "0.7"}).code == lerchzeta::cli::kDomain);
  CHECK(call({"eval", "hurwitz", "--sigma", "0.5", "--a", "0"}).code == lerchzeta::cli::kDomain);
  CHECK(call({"eval", "bogus"}).code == lerchzeta::cli::kDomain);
  CHECK(call({"eval", "double", "--method", "nope"}).code == lerchzeta::cli::kDomain);
  const auto r = call({"eval", "lerch", "--sigma", "0.5", "--t", "30", "--a", "0.3", "--z-re", "-1", "--max-depth",
                       "3", "--rel-tol", "1e-15", "--abs-tol", "1e-18"});
  CHECK(r.code == lerchzeta::cli::kNonConvergence);
  CHECK(r.err.find("nonconvergence: ") == 0);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output does not depend on the run or the job count") {
  const std::vector<std::string> base = {"zeros", "hurwitz", "--a-min", "0.05", "--a-max", "0.45", "--steps", "5"};
  auto with_jobs = [&](const char* jobs) {
    auto args = base;
    args.insert(args.begin(), {"--jobs", jobs});
    return call(args).out;
  };
  const std::string one = with_jobs("1");
  CHECK(one == with_jobs("1"));
  CHECK(one == with_jobs("3"));
}

TEST_CASE("--out writes the result to a file") {
  const std::string path = "test_cli_out.json";
  const auto r = call({"--out", path, "eval", "hurwitz", "--sigma", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(std::abs(j["value"]["re"].get<double>() - 1.6449340668482264) < 1e-14);
  std::remove(path.c_str());
}
