#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "driver.hpp"
#include "properties.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "coframes");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = coframes::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COFRAMES_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("suite list and unknown names") {
  const Run list = cli({"suite", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("not-strong") != std::string::npos);
  CHECK(cli({"suite", "no-such-suite"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--cap", "99", "suite", "dsub-weq"}).code == 2);
  CHECK(cli({"--prime", "4", "properties"}).code == 2);
}

TEST_CASE("category files") {
  CHECK(cli({"validate", data("zigzag_w.json")}).code == 0);
  const Run missing = cli({"validate", data("missing_composite.json")});
  CHECK(missing.code == 1);
  CHECK(missing.out.find("FAIL") != std::string::npos);
  CHECK(cli({"validate", data("bad_endpoints.json")}).code == 1);
  const Run bad = cli({"nerve", data("truncated.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("parse error") != std::string::npos);
  CHECK(cli({"validate", data("does_not_exist.json")}).code == 2);
  CHECK(cli({"weq-closure", "--mode", "2of6", data("zigzag_w.json")}).code == 0);
  CHECK(cli({"dsub", "build", data("ordinal1.json")}).code == 0);
}

TEST_CASE("simplicial set files") {
  CHECK(cli({"hocat", data("wedge.json")}).code == 0);
  CHECK(cli({"sset", "verify-filtration", data("spine3.json")}).code == 0);
}

TEST_CASE("complexes, maps and diagrams") {
  CHECK(cli({"validate", data("x.json")}).code == 0);
  CHECK(cli({"classify", data("qiso.json")}).out.find("weak equivalence yes") != std::string::npos);
  CHECK(cli({"reedy", "check", data("seq_cof.json")}).code == 0);
  // A random map between the terms is not injective.
  CHECK(cli({"reedy", "check", data("seq.json")}).code == 1);
  CHECK(cli({"reedy", "colim", data("seq_cof.json")}).code == 0);
  CHECK(cli({"reedy", "replace", data("zigzag_diagram.json")}).code == 0);
  CHECK(cli({"frames", "triangle", data("f.json"), data("g.json")}).code == 0);
  CHECK(cli({"frames", "lift", data("zigzag_diagram.json")}).code == 0);
}

TEST_CASE("reports are deterministic per seed") {
  const std::vector<std::string> args{"--seed", "5", "--cases", "3", "--format", "jsonl", "suite", "theta"};
  const Run a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("suite"));
    CHECK(j.contains("case"));
    CHECK(j.contains("check"));
    CHECK(j["status"] == "pass");
    ++n;
  }
  CHECK(n == 9);
  const Run other = cli({"--seed", "6", "--cases", "3", "--format", "jsonl", "suite", "theta"});
  CHECK(other.out != a.out);
}

TEST_CASE("--out writes the JSONL report") {
  const auto path = std::filesystem::temp_directory_path() / "coframes_cli_test_report.jsonl";
  std::filesystem::remove(path);
  CHECK(cli({"--quiet", "--out", path.string(), "suite", "reedy-examples"}).code == 0);
  std::ifstream in(path);
  std::string first;
  REQUIRE(std::getline(in, first));
  CHECK(nlohmann::json::parse(first)["suite"] == "reedy-examples");
  std::filesystem::remove(path);
}

}

TEST_SUITE("properties") {

using coframes::cli::Property;
using coframes::cli::Size;

TEST_CASE("a passing property runs every case") {
  const Property p{"test", "always", [](coframes::chain::Rng&, const Size&) { return std::optional<std::string>{}; }};
  const auto r = coframes::cli::run_property(p, 1, 1000, 25);
  CHECK(r.pass);
  CHECK(r.runs == 25);
}

TEST_CASE("a failure is shrunk to the smallest failing size") {
  // Fails whenever degrees >= 2, whatever the other parameters.
  const Property p{"test", "degrees", [](coframes::chain::Rng&, const Size& s) -> std::optional<std::string> {
                     if (s.degrees >= 2) return "degrees = " + std::to_string(s.degrees);
                     return std::nullopt;
                   }};
  const auto r = coframes::cli::run_property(p, 1, 1000, 10);
  CHECK_FALSE(r.pass);
  CHECK(r.failing_case == 0);
  CHECK(r.minimized.degrees == 2);
  CHECK(r.minimized.dim == 1);
  CHECK(r.minimized.objects == 1);
}

TEST_CASE("seeded case streams are reproducible and distinct") {
  auto a = coframes::cli::case_rng(9, 3, 4), b = coframes::cli::case_rng(9, 3, 4), c = coframes::cli::case_rng(9, 3, 5);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
}

TEST_CASE("the module properties pass at a small case count") {
  coframes::cli::SuiteConfig cfg;
  cfg.cases = 20;
  const coframes::cli::Report rep = coframes::cli::run_property_tests(cfg);
  CHECK(rep.ok());
  CHECK(rep.checks().size() >= 20);
}

}
