// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "thetakit/checks.hpp"

using namespace thetakit;
using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

std::string verify_bin() {
  const char* env = std::getenv("VERIFY_BIN");
  return env ? env : "./verify";
}

Result run(const std::string& args) {
  std::string cmd = verify_bin() + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json strip_runtime(json j) {
  if (j.is_object()) {
    j.erase("runtime_ms");
    for (auto& [k, v] : j.items()) v = strip_runtime(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_runtime(v);
  }
  return j;
}

void check_report_schema(const json& r) {
  for (const char* key : {"id", "status", "expected", "computed", "parameters", "field", "primes", "seed", "runtime_ms", "notes"})
    CHECK_MESSAGE(r.contains(key), key);
  CHECK(r["id"].is_string());
  CHECK(std::set<std::string>{"PASS", "FAIL", "INCONCLUSIVE"}.count(r["status"].get<std::string>()) == 1);
  CHECK(r["primes"].is_array());
  CHECK(r["seed"].is_number_unsigned());
  CHECK(r["runtime_ms"].is_number());
  CHECK(r["notes"].is_array());
}

}  // namespace

TEST_CASE("list") {
  Result r = run("list");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::vector<std::string> ids;
  for (std::string line; std::getline(in, line);) ids.push_back(line.substr(0, line.find('\t')));
  CHECK(ids.size() >= 28);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::find(ids.begin(), ids.end(), "sp4.order") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "d13.degree21") != ids.end());
  CHECK(ids.size() == list_checks().size());
}

TEST_CASE("run reports and exit codes") {
  Result ok = run("run sp4.order");
  CHECK(ok.code == 0);
  json report = json::parse(ok.out);
  check_report_schema(report);
  CHECK(report["status"] == "PASS");

  CHECK(run("run nosuch").code == 2);
  CHECK(run("run d13.degree21 --prime 32000").code == 2);
  CHECK(run("run sp4.order --prime 31991").code == 2);
  CHECK(run("run d9.fiber-degree --field Q").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("fiber degree is stable across seeds and primes") {
  for (const char* args : {"--seed 7", "--seed 8", "--seed 7 --prime 101"}) {
    Result r = run(std::string("run d9.fiber-degree ") + args);
    CHECK(r.code == 0);
    json report = json::parse(r.out);
    CHECK(report["status"] == "PASS");
    CHECK(report["computed"] == json({6, 6, 6}));
  }
  json with_prime = json::parse(run("run d9.fiber-degree --prime 101").out);
  CHECK(with_prime["primes"][0] == 101);
}

TEST_CASE("all --json writes a valid summary") {
  auto path = std::filesystem::temp_directory_path() / "thetakit_verify_all.json";
  Result r = run("all --workers 2 --json " + path.string());
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  json doc = json::parse(in);
  CHECK(doc["version"] == 1);
  CHECK(doc["options"].contains("primes"));
  CHECK(doc["options"].contains("seed"));
  REQUIRE(doc["checks"].is_array());
  CHECK(doc["checks"].size() == list_checks().size());
  for (const auto& c : doc["checks"]) check_report_schema(c);
  const json& s = doc["summary"];
  CHECK(s["pass"].get<size_t>() + s["fail"].get<size_t>() + s["inconclusive"].get<size_t>() == doc["checks"].size());
  CHECK(s["fail"] == 0);
  std::filesystem::remove(path);
}

TEST_CASE("fault injection isolates the corrupted check") {
  std::vector<CheckDescriptor> checks;
  for (const char* id : {"sp4.order", "chars.census", "groups.igusa", "vsp.dim"}) checks.push_back(find_check(id));
  checks[1].expected = json{{"corrupted", true}};
  RunSummary s = run_all(checks, {}, 2);
  REQUIRE(s.reports.size() == 4);
  CHECK(s.fail == 1);
  CHECK(s.pass == 3);
  for (const auto& r : s.reports) CHECK((r.status == CheckStatus::Fail) == (r.id == "chars.census"));

  // A throwing check is reported as a failure with the error message.
  CheckDescriptor boom = find_check("sp4.order");
  boom.run = [](CheckContext&) -> json { throw std::runtime_error("boom"); };
  CheckReport r = run_check(boom);
  CHECK(r.status == CheckStatus::Fail);
  CHECK(r.computed["error"] == "boom");
}

TEST_CASE("results do not depend on the worker count") {
  std::vector<CheckDescriptor> checks;
  for (const auto& d : list_checks())
    if (d.module != "pfaffian-loci") checks.push_back(d);
  CheckOptions opts;
  json one = strip_runtime(run_all(checks, opts, 1).to_json(opts));
  json four = strip_runtime(run_all(checks, opts, 4).to_json(opts));
  CHECK(one == four);
}

TEST_CASE("option validation") {
  CHECK_THROWS_AS(run_check("nosuch"), CheckError);
  CheckOptions bad_prime;
  bad_prime.prime = 32001;
  CHECK_THROWS_AS(run_check("d13.degree21", bad_prime), CheckError);
  CheckOptions field_q;
  field_q.field = "Q";
  CHECK_THROWS_AS(run_check("d9.fiber-degree", field_q), CheckError);
  CheckOptions prime_on_fieldless;
  prime_on_fieldless.prime = 31991;
  CHECK_THROWS_AS(run_check("sp4.order", prime_on_fieldless), CheckError);
}
