#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqhc/criterion/scenario.hpp"
#include "seqhc/operators/snake.hpp"
#include "seqhc/spaces/rational.hpp"

namespace seqhc::scenarios {

enum class ScenarioKind { analytic, snake, oracle };
enum class ArithmeticMode { exact, floating };

std::string to_string(ScenarioKind k);
std::string to_string(ArithmeticMode m);

struct Command {
  enum class Kind { check_i, check_ii, check_iii, check_primed, build_vector, verify_orbit, probe };
  Kind kind = Kind::check_i;
  /// Partial-sum length for build-vector, verify-orbit and probe.
  std::size_t N = 12;
  std::size_t from = 2;
  std::size_t to = 8;
  std::size_t target = 1;
  std::uint64_t n_max = 64;

  std::string name() const;
  criterion::json arguments() const;
};

/// Parses "check-i", "build-vector:8", "verify-orbit:2..6", "probe:3:100" style
/// command strings (the command-line spelling).
Command parse_command(const std::string& text);

struct RunConfig {
  ScenarioKind scenario = ScenarioKind::analytic;
  ArithmeticMode mode = ArithmeticMode::exact;
  std::size_t horizon = 12;
  criterion::Horizons horizons;
  criterion::Tolerances tolerances;
  /// Explicit tolerance settings; unset fields take scenario defaults.
  std::optional<double> decay_tol;
  std::optional<double> estimate_tol;
  std::optional<bool> exact_zero_primed;

  std::size_t dense_count = 16;
  int mesh_density = 16;
  std::size_t schedule_length = 256;

  Rational lambda{2};
  std::string space = "l1";
  std::size_t targets = 8;
  std::optional<operators::GrowthBudget> budget;

  std::size_t oracle_length = 20;

  /// "scenario" runs the Proposition on n_k as given, "greedy" on the
  /// diagonal subsequence chosen by select_proposition_schedule.
  std::string proposition_schedule = "scenario";

  std::vector<Command> commands;
};

/// JSON config. Throws ConfigError naming the offending field and its line.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

/// Range checks that depend on the final horizon (after command-line overrides).
void validate_run_config(const RunConfig& cfg);

}  // namespace seqhc::scenarios
