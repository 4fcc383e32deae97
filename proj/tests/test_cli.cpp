#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "octarep/repcount.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "octarep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = octarep::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> records(const std::string& text) {
  std::vector<nlohmann::json> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(nlohmann::json::parse(line));
  return v;
}

}  // namespace

TEST_CASE("expand") {
  auto r = run({"expand", "--series", "theta", "--prec", "5", "--format", "records"});
  CHECK(r.code == 0);
  auto rec = records(r.out);
  REQUIRE(rec.size() == 1);
  CHECK(rec[0]["kind"] == "expand");
  CHECK(rec[0]["coefficients"] == nlohmann::json({"1", "2", "0", "0", "2"}));
  r = run({"expand", "--series", "f4_6", "--prec", "3", "--format", "records"});
  CHECK(records(r.out)[0]["coefficients"] == nlohmann::json({"0", "1", "-2"}));
  r = run({"expand", "--series", "nosuch"});
  CHECK(r.code == 1);
  CHECK(r.err.find("unknown series") != std::string::npos);
  r = run({"expand", "--series", "1^2 2^2 3^2 6^2", "--prec", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-2") != std::string::npos);
}

TEST_CASE("count") {
  auto r = run({"count", "--form", "A:1,1,1,1,1,1", "--n", "1", "--format", "records"});
  CHECK(r.code == 0);
  CHECK(records(r.out)[0]["count"] == 20);
  r = run({"count", "--form", "A:3,1,1,1,1,1", "--n", "1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("a2") != std::string::npos);
  r = run({"count", "--form", "A:1,1,1,1,1,1", "--n", "1", "--nmax", "3"});
  CHECK(r.code == 1);
  r = run({"count", "--form", "B:1,1,2", "--nmax", "3", "--format", "records"});
  CHECK(records(r.out).size() == 4);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"count"}).code == 1);
  CHECK(run({"solve", "--form", "A:1,1,1,1,1,1", "--format", "xml"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solve matches the family-B reference row") {
  auto r = run({"solve", "--form", "B:1,1,2", "--format", "records"});
  CHECK(r.code == 0);
  const auto rec = records(r.out)[0];
  CHECK(rec["space"] == "trivial");
  CHECK(rec["coefficients"] ==
        nlohmann::json({"3/40", "-1/5", "-27/40", "0", "9/5", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"}));
  CHECK(rec["basis"][0] == "E4(z)");
}

TEST_CASE("solve output round-trips through eval for every form") {
  for (const auto& f : octarep::enumerate_forms()) {
    const std::string label = f.label();
    CAPTURE(label);
    const auto solved = run({"solve", "--form", label, "--format", "records"});
    REQUIRE(solved.code == 0);
    const auto rec = records(solved.out);
    std::string coeffs;
    for (const auto& c : rec[0]["coefficients"]) coeffs += (coeffs.empty() ? "" : ",") + c.get<std::string>();
    const auto evaluated = records(run({"eval", "--form", label, "--coeffs", coeffs, "--nmax", "40", "--format", "records"}).out);
    const auto counted = records(run({"count", "--form", label, "--nmax", "40", "--format", "records"}).out);
    REQUIRE(evaluated.size() == 41);
    REQUIRE(counted.size() == 41);
    bool ok = true;
    for (std::size_t n = 0; n <= 40; ++n)
      ok = ok && evaluated[n]["value"].get<std::string>() == std::to_string(counted[n]["count"].get<long>());
    CHECK(ok);
  }
}

TEST_CASE("verify, tables and basis exit codes") {
  auto r = run({"verify", "--all", "--format", "records", "--jobs", "2"});
  CHECK(r.code == 0);
  const auto rec = records(r.out);
  REQUIRE(rec.size() == 109);
  CHECK(rec.front()["form"] == "A:1,1,1,1,1,1");
  CHECK(rec.back()["form"] == "B:8,8,8");
  CHECK(run({"verify", "--form", "B:1,2,4", "--nmax", "60"}).code == 0);
  CHECK(run({"verify"}).code == 1);

  r = run({"tables", "--table", "6", "--format", "records"});
  CHECK(r.code == 0);
  std::size_t errata = 0, rows = 0;
  for (const auto& j : records(r.out)) {
    if (j["kind"] == "erratum") ++errata;
    if (j["kind"] == "diff") {
      ++rows;
      CHECK(j["status"] == "match");
    }
  }
  CHECK(rows == 18);
  CHECK(errata == 2);
  CHECK(run({"tables", "--table", "6", "--basis", "printed"}).code == 3);
  CHECK(run({"tables", "--table", "9"}).code == 1);

  r = run({"basis", "--space", "chi24", "--format", "records"});
  CHECK(r.code == 0);
  const auto b = records(r.out)[0];
  CHECK(b["printed_rank"] == 13);
  CHECK(b["remediated_rank"] == 14);
  CHECK(b["substitutions"].size() == 2);
  CHECK(run({"basis", "--space", "chi7"}).code == 1);
}

TEST_CASE("output is deterministic") {
  const auto a = run({"solve", "--form", "A:1,2,3,3,2,4"});
  const auto b = run({"solve", "--form", "A:1,2,3,3,2,4"});
  CHECK(a.out == b.out);
  CHECK(run({"solve", "--form", "A:1,2,3,3,2,4", "--isa", "scalar"}).code == 1);
  CHECK(run({"--isa", "scalar", "solve", "--form", "A:1,2,3,3,2,4"}).out == a.out);
}
