#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "seqhc/cli/run.hpp"
#include "seqhc/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"seqhc: finite-horizon checks of a sequential hypercyclicity criterion"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run the commands of a scenario config");
  std::string config;
  std::string out;
  std::string format = "json";
  std::vector<std::string> commands;
  bool exact = false;
  bool floating = false;
  std::size_t horizon = 0;
  run->add_option("config", config, "scenario config (JSON)")->required();
  run->add_option("--out", out, "output directory (default: $SEQHC_OUT_DIR or ./seqhc-out)");
  run->add_option("--format", format, "json, csv or both")->check(CLI::IsMember({"json", "csv", "both"}));
  run->add_option("--command", commands,
                  "replace the config's commands, e.g. check-iii, build-vector:8, verify-orbit:2..6:8, probe:3:100:8");
  auto* exact_flag = run->add_flag("--exact", exact, "exact rational arithmetic where the scenario supports it");
  run->add_flag("--float", floating, "double-precision arithmetic")->excludes(exact_flag);
  run->add_option("--horizon", horizon, "number of seminorms materialized")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  seqhc::cli::RunRequest request;
  request.config_path = config;
  try {
    for (const auto& c : commands) request.commands.push_back(seqhc::scenarios::parse_command(c));
  } catch (const seqhc::ConfigError& e) {
    std::cerr << "seqhc: " << e.what() << "\n";
    return seqhc::cli::kExitError;
  }
  if (out.empty()) {
    const char* env = std::getenv("SEQHC_OUT_DIR");
    out = env && *env ? env : "seqhc-out";
  }
  request.output = out;
  request.format = seqhc::cli::parse_format(format);
  if (exact) request.mode = seqhc::scenarios::ArithmeticMode::exact;
  if (floating) request.mode = seqhc::scenarios::ArithmeticMode::floating;
  if (horizon) request.horizon = horizon;

  const auto result = seqhc::cli::run(request, std::cerr);
  for (const auto& f : result.files) std::cout << f.string() << "\n";
  return result.exit_status;
}
