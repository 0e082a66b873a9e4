#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seqhc/scenarios/config.hpp"

namespace seqhc::cli {

enum class Format { json, csv, both };

Format parse_format(const std::string& text);

struct RunRequest {
  std::filesystem::path config_path;
  /// Replaces the config's command list when non-empty.
  std::vector<scenarios::Command> commands;
  std::filesystem::path output;
  Format format = Format::json;
  std::optional<scenarios::ArithmeticMode> mode;
  std::optional<std::size_t> horizon;
};

struct RunResult {
  int exit_status = 0;
  std::vector<std::filesystem::path> files;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFail = 2;
inline constexpr int kExitInconclusive = 3;

inline constexpr const char* kReportSchema = "seqhc.report/1";

/// Loads the config, builds the scenario and runs every command in order,
/// writing one report per command into `request.output`. Errors are reported
/// on `diag` and mapped to exit status 1; nothing propagates.
RunResult run(const RunRequest& request, std::ostream& diag);

/// Same, for an already parsed config.
RunResult run(scenarios::RunConfig cfg, const RunRequest& request, std::ostream& diag);

}  // namespace seqhc::cli
