#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "seqhc/cli/run.hpp"
#include "seqhc/errors.hpp"

using namespace seqhc;
using namespace seqhc::cli;
using scenarios::parse_run_config;
namespace fs = std::filesystem;

namespace {

const fs::path& scratch_root() {
  static const struct Root {
    fs::path path = fs::temp_directory_path() / ("seqhc-test-" + std::to_string(::getpid()));
    ~Root() {
      std::error_code ec;
      fs::remove_all(path, ec);
    }
  } root;
  return root.path;
}

fs::path scratch(const std::string& name) {
  const auto p = scratch_root() / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Outcome {
  RunResult result;
  std::string diag;
};

Outcome run_text(const std::string& config, const std::string& dir, Format format = Format::json) {
  RunRequest req;
  req.output = scratch(dir);
  req.format = format;
  std::ostringstream diag;
  Outcome o;
  try {
    o.result = run(parse_run_config(config), req, diag);
  } catch (const ConfigError& e) {
    o.result.exit_status = kExitError;
    diag << e.what();
  }
  o.diag = diag.str();
  return o;
}

int run_binary(const std::string& args) {
  const int status = std::system((std::string(SEQHC_BIN) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config errors name the field and line") {
  try {
    parse_run_config("{\n  \"scenario\": \"snake\",\n  \"snake\": {\n    \"lambda\": 1.0\n  }\n}\n");
    FAIL("expected rejection");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "snake.lambda");
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("lambda > 1") != std::string::npos);
  }
  try {
    parse_run_config("{\n  \"scenario\": \"analytic\",\n  \"horizon\": -3\n}");
    FAIL("expected rejection");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "horizon");
    CHECK(e.line() == 3);
  }
  try {
    parse_run_config("{\n  \"scenario\": \"analytic\",\n  \"colour\": 1\n}");
    FAIL("expected rejection");
  } catch (const ConfigError& e) {
    CHECK(e.field() == "colour");
    CHECK(e.line() == 3);
  }
  try {
    parse_run_config("{\n  \"scenario\": \"analytic\",\n\n  \"horizon\": 12,,\n}");
    FAIL("expected rejection");
  } catch (const ConfigError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_run_config(R"({"horizon": 3})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"scenario": "snake", "snake": {"space": "l0.3"}})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"scenario": "analytic", "commands": ["check-iv"]})"), ConfigError);
  CHECK_THROWS_AS(parse_run_config(R"({"scenario": "oracle", "oracle": {"length": 20000}})"), ConfigError);
}

TEST_CASE("commands") {
  const auto cfg = parse_run_config(R"({"scenario": "analytic", "commands": [
      "check-i", "build-vector:8", {"command": "verify-orbit", "from": 2, "to": 6, "N": 8},
      {"command": "probe", "target": 3, "n_max": 99}]})");
  REQUIRE(cfg.commands.size() == 4);
  CHECK(cfg.commands[1].N == 8);
  CHECK(cfg.commands[2].to == 6);
  CHECK(cfg.commands[3].n_max == 99);
  const auto c = scenarios::parse_command("verify-orbit:2..6:10");
  CHECK(c.from == 2);
  CHECK(c.to == 6);
  CHECK(c.N == 10);
  const auto p = scenarios::parse_command("probe:3:100:8");
  CHECK(p.target == 3);
  CHECK(p.n_max == 100);
  CHECK(p.N == 8);
  CHECK_THROWS_AS(scenarios::parse_command("check-i:3"), ConfigError);
  CHECK_THROWS_AS(scenarios::parse_command("verify-orbit:2"), ConfigError);

  auto bad = cfg;
  bad.commands.clear();
  CHECK_THROWS_AS(scenarios::validate_run_config(bad), ConfigError);
  bad = cfg;
  bad.commands[1].N = 50;
  CHECK_THROWS_AS(scenarios::validate_run_config(bad), ConfigError);
  bad = cfg;
  bad.commands[2].from = 7;
  CHECK_THROWS_AS(scenarios::validate_run_config(bad), ConfigError);
}

TEST_CASE("exit status: analytic check-iii passes with an all-zero defect table") {
  const auto o = run_text(R"({"scenario": "analytic", "commands": ["check-iii"]})", "pass", Format::both);
  CHECK(o.result.exit_status == kExitPass);
  REQUIRE(o.result.files.size() == 2);
  const auto doc = nlohmann::ordered_json::parse(slurp(o.result.files[0]));
  CHECK(doc["schema"] == kReportSchema);
  CHECK(doc["verdict"] == "pass");
  for (const auto& s : doc["reports"][0]["samples"]) {
    CHECK(s["exact_zero"] == true);
    CHECK(s["fnorm"] == 0);
  }
  const auto csv = slurp(o.result.files[1]);
  CHECK(csv.rfind("condition,k,j,x,seminorm_1,", 0) == 0);
  CHECK(csv.find("iii,6,-1,6,0,0,0,0,0,0,0,0,0,0,0,0,0,1,1\n") != std::string::npos);
}

TEST_CASE("exit status: failing verdict") {
  const auto o = run_text(
      R"({"scenario": "snake", "k_max": 8, "tail_max": 8, "commands": ["check-primed"]})", "fail");
  CHECK(o.result.exit_status == kExitFail);
  const auto doc = nlohmann::ordered_json::parse(slurp(o.result.files.at(0)));
  CHECK(doc["verdict"] == "fail");
  CHECK(doc["reports"].size() == 3);
  CHECK_FALSE(doc["reports"][0]["witness"].is_null());
}

TEST_CASE("exit status: inconclusive verdict") {
  const auto o = run_text(
      R"({"scenario": "oracle", "horizon": 4, "k_max": 3, "commands": ["check-i"]})", "inconclusive");
  CHECK(o.result.exit_status == kExitInconclusive);
  const auto v = run_text(
      R"({"scenario": "snake", "commands": [{"command": "verify-orbit", "from": 2, "to": 8, "N": 8}]})", "margin");
  CHECK(v.result.exit_status == kExitInconclusive);
}

TEST_CASE("exit status: errors") {
  const auto lambda = run_text(R"({"scenario": "snake", "snake": {"lambda": "1"}, "commands": ["check-i"]})", "l1");
  CHECK(lambda.result.exit_status == kExitError);

  const auto budget = run_text(R"({"scenario": "snake", "snake": {"space": "s", "targets": 6,
      "budget": {"coefficient": 1, "power": 1}}, "commands": ["check-iii"]})", "budget");
  CHECK(budget.result.exit_status == kExitError);
  CHECK(budget.diag.find("target k = ") != std::string::npos);

  RunRequest missing;
  missing.config_path = "/nonexistent/seqhc.json";
  missing.output = scratch("missing");
  std::ostringstream diag;
  CHECK(run(missing, diag).exit_status == kExitError);
}

TEST_CASE("snake pipeline: build-vector(8), verify-orbit(2..6)") {
  const auto o = run_text(R"({"scenario": "snake", "commands": ["build-vector:8", "verify-orbit:2..6:8"]})", "pipe");
  CHECK(o.result.exit_status == kExitPass);
  const auto doc = nlohmann::ordered_json::parse(slurp(o.result.files.at(1)));
  const auto& rows = doc["reports"][0]["samples"];
  REQUIRE(rows.size() == 5);
  for (const auto& r : rows) {
    CHECK(r["pass"] == true);
    CHECK(r["fnorm"].get<double>() <= std::ldexp(1.0, 2 - r["k"].get<int>()));
  }
  CHECK(doc["provenance"]["dense_family"]["id"] == "height-lex-v1");
  CHECK(doc["provenance"]["schedule"].size() == 8);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string cfg = R"({"scenario": "snake", "mode": "float", "commands": ["check-primed", "build-vector:6",
      "probe:3:20:6"]})";
  const auto a = run_text(cfg, "det-a", Format::both);
  const auto b = run_text(cfg, "det-b", Format::both);
  REQUIRE(a.result.files.size() == b.result.files.size());
  REQUIRE(a.result.files.size() == 6);
  for (std::size_t i = 0; i < a.result.files.size(); ++i) {
    CHECK(a.result.files[i].filename() == b.result.files[i].filename());
    CHECK(slurp(a.result.files[i]) == slurp(b.result.files[i]));
  }
}

TEST_CASE("command-line binary") {
  const std::string configs = SEQHC_CONFIGS;
  const auto out = scratch("bin");
  CHECK(run_binary("run " + configs + "/analytic_check_iii.json --out " + out.string()) == 0);
  CHECK(fs::exists(out / "01-check-iii.json"));
  CHECK(run_binary("run " + configs + "/snake_pipeline.json --format csv --out " + out.string()) == 0);
  CHECK(fs::exists(out / "02-verify-orbit.csv"));
  CHECK(run_binary("run " + configs + "/snake_lambda_one.json --out " + out.string()) == 1);
  CHECK(run_binary("run " + configs + "/snake_pipeline.json --float --command check-iii --out " + out.string()) == 0);
  CHECK(run_binary("run " + configs + "/snake_pipeline.json --exact --float") != 0);

  const auto env_out = scratch("env");
  const std::string env_cmd = "SEQHC_OUT_DIR=" + env_out.string() + " " + std::string(SEQHC_BIN) + " run " +
                              configs + "/analytic_check_iii.json --horizon 6 >/dev/null 2>&1";
  CHECK(std::system(env_cmd.c_str()) == 0);
  const auto doc = nlohmann::ordered_json::parse(slurp(env_out / "01-check-iii.json"));
  CHECK(doc["config"]["horizon"] == 6);
}
