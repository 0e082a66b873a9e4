#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace seqhc::criterion {

using json = nlohmann::ordered_json;

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

/// Combined verdict: any fail wins, then any inconclusive.
Verdict combine(Verdict a, Verdict b);

/// One evaluated tuple. `j` and `x` are -1 when not applicable.
struct Sample {
  std::int64_t k = 0;
  std::int64_t j = -1;
  std::int64_t x = -1;
  std::vector<double> seminorms;
  double fnorm = 0.0;
  /// Radius of the target ball or the decay tolerance, whichever applies.
  double radius = 0.0;
  bool in_y = false;
  bool exact_zero = false;
  bool member = false;
  bool pass = false;
  bool inconclusive = false;
  std::string note;
};

/// Finite-horizon summary of one sequence (fixed j and x) in a primed check.
struct SequenceSummary {
  std::int64_t j = -1;
  std::int64_t x = -1;
  /// First k from which every later term lies in Y.
  std::optional<std::int64_t> contained_from;
  /// First k from which every later term is below tolerance (or exactly zero).
  std::optional<std::int64_t> settled_from;
  Verdict verdict = Verdict::inconclusive;
};

struct ConditionReport {
  /// i, ii, iii, i', ii', iii', build, orbit, probe
  std::string condition_id;
  std::vector<Sample> samples;
  std::vector<SequenceSummary> sequences;
  Verdict verdict = Verdict::pass;
  std::optional<Sample> witness;
  json details = json::object();
};

/// Shortest round-trip decimal; zero prints as "0".
std::string format_number(double v);

json to_json(const Sample& s);
json to_json(const SequenceSummary& s);
json to_json(const ConditionReport& r);

/// CSV rows (condition, k, j, x, seminorm_1..seminorm_H, fnorm, member, pass)
/// with a fixed column order; a report without samples yields the header only.
std::string emit_convergence_table(std::span<const ConditionReport> reports, std::size_t horizon);
std::string emit_convergence_table(const ConditionReport& report, std::size_t horizon);

/// Label used in reports: passes are finite-horizon evidence only.
std::string verdict_label(Verdict v);

}  // namespace seqhc::criterion
