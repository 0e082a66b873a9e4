#include "seqhc/cli/run.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>

#include "seqhc/criterion/construction.hpp"
#include "seqhc/errors.hpp"
#include "seqhc/scenarios/analytic.hpp"
#include "seqhc/scenarios/oracle_shift.hpp"
#include "seqhc/scenarios/snake_scenario.hpp"
#include "seqhc/spaces/sequence_norm.hpp"
#include "seqhc/spaces/serialize.hpp"

namespace seqhc::cli {

using criterion::ConditionReport;
using criterion::json;
using criterion::Verdict;
using scenarios::Command;
using scenarios::RunConfig;

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "both") return Format::both;
  throw ConfigError("format", 0, "unknown format '" + text + "' (json, csv or both)");
}

namespace {

struct CommandOutput {
  std::vector<ConditionReport> reports;
  json extra = json::object();
};

void apply_tolerances(criterion::Tolerances& t, const RunConfig& cfg) {
  if (cfg.decay_tol) t.decay = *cfg.decay_tol;
  if (cfg.estimate_tol) t.estimate = *cfg.estimate_tol;
  if (cfg.exact_zero_primed) t.exact_zero_primed = *cfg.exact_zero_primed;
}

template <class V>
class Executor {
 public:
  Executor(criterion::ScenarioSpec<V> sc, const RunConfig& cfg) : sc_(std::move(sc)), cfg_(cfg) {}

  const criterion::ScenarioSpec<V>& spec() const { return sc_; }

  CommandOutput execute(const Command& c) {
    CommandOutput out;
    const auto& h = sc_.horizons;
    switch (c.kind) {
      case Command::Kind::check_i:
        out.reports.push_back(criterion::check_condition_i(sc_, h.k_max));
        break;
      case Command::Kind::check_ii:
        out.reports.push_back(criterion::check_condition_ii(sc_, h.k_max, h.tail_max));
        break;
      case Command::Kind::check_iii:
        out.reports.push_back(criterion::check_condition_iii(sc_, h.k_max));
        break;
      case Command::Kind::check_primed: {
        auto r = criterion::check_corollary_conditions(sc_, h.k_max, h.tail_max);
        out.reports = {std::move(r.i), std::move(r.ii), std::move(r.iii)};
        break;
      }
      case Command::Kind::build_vector: {
        const auto& x = partial(c.N);
        out.reports.push_back(x.certificate);
        out.extra["vector"] = spaces::to_json(x.value);
        out.extra["proposition_schedule"] = schedule_json(c.N);
        break;
      }
      case Command::Kind::verify_orbit: {
        const auto& x = partial(c.N);
        out.reports.push_back(criterion::verify_orbit_range(proposition(c.N), x, c.from, c.to));
        out.extra["proposition_schedule"] = schedule_json(c.N);
        break;
      }
      case Command::Kind::probe: {
        const auto& x = partial(c.N);
        const auto& sc = proposition(c.N);
        const auto res = criterion::density_probe(sc, x.value, sc.target(c.target), c.n_max);
        ConditionReport r;
        r.condition_id = "probe";
        r.verdict = std::isfinite(res.best_distance) ? Verdict::pass : Verdict::inconclusive;
        r.details = {{"target", c.target},
                     {"n_max", c.n_max},
                     {"best_n", res.best_n},
                     {"best_distance", criterion::format_number(res.best_distance)}};
        out.reports.push_back(std::move(r));
        out.extra["proposition_schedule"] = schedule_json(c.N);
        break;
      }
    }
    return out;
  }

 private:
  /// The scenario the Proposition runs on for partial sums of length N.
  const criterion::ScenarioSpec<V>& proposition(std::size_t N) {
    if (cfg_.proposition_schedule != "greedy") return sc_;
    auto it = greedy_.find(N);
    if (it == greedy_.end())
      it = greedy_.emplace(N, criterion::with_schedule(sc_, criterion::select_proposition_schedule(sc_, N))).first;
    return it->second;
  }

  const criterion::PartialVector<V>& partial(std::size_t N) {
    auto it = partials_.find(N);
    if (it == partials_.end())
      it = partials_.emplace(N, criterion::build_partial_hypercyclic_vector(proposition(N), N)).first;
    return it->second;
  }

  json schedule_json(std::size_t N) {
    const auto& sc = proposition(N);
    json n = json::array();
    for (std::size_t k = 1; k <= N && k < sc.schedule.size(); ++k) n.push_back(sc.schedule[k]);
    return {{"rule", cfg_.proposition_schedule == "greedy" ? "greedy-diagonal" : "scenario"}, {"n_k", n}};
  }

  criterion::ScenarioSpec<V> sc_;
  const RunConfig& cfg_;
  std::map<std::size_t, criterion::ScenarioSpec<V>> greedy_;
  std::map<std::size_t, criterion::PartialVector<V>> partials_;
};

json config_json(const RunConfig& cfg, const criterion::Horizons& h, const criterion::Tolerances& t) {
  return {{"scenario", scenarios::to_string(cfg.scenario)},
          {"mode", scenarios::to_string(cfg.mode)},
          {"horizon", cfg.horizon},
          {"k_max", h.k_max},
          {"tail_max", h.tail_max},
          {"margin", h.margin},
          {"tolerances",
           {{"decay", t.decay}, {"estimate", t.estimate}, {"exact_zero_primed", t.exact_zero_primed}}},
          {"proposition_schedule", cfg.proposition_schedule}};
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

template <class V>
RunResult execute_all(Executor<V>& ex, const RunConfig& cfg, const RunRequest& request) {
  RunResult result;
  const auto& sc = ex.spec();
  std::filesystem::create_directories(request.output);
  bool failed = false;
  bool inconclusive = false;
  for (std::size_t i = 0; i < cfg.commands.size(); ++i) {
    const Command& c = cfg.commands[i];
    CommandOutput out = ex.execute(c);
    Verdict verdict = Verdict::pass;
    for (const auto& r : out.reports) verdict = criterion::combine(verdict, r.verdict);
    failed = failed || verdict == Verdict::fail;
    inconclusive = inconclusive || verdict == Verdict::inconclusive;

    char stem[64];
    std::snprintf(stem, sizeof stem, "%02zu-%s", i + 1, c.name().c_str());
    if (request.format != Format::csv) {
      json doc = {{"schema", kReportSchema},
                  {"command", c.name()},
                  {"arguments", c.arguments()},
                  {"verdict", criterion::to_string(verdict)},
                  {"label", criterion::verdict_label(verdict)},
                  {"config", config_json(cfg, sc.horizons, sc.tolerances)},
                  {"provenance", sc.provenance}};
      for (auto it = out.extra.begin(); it != out.extra.end(); ++it) doc[it.key()] = it.value();
      json reports = json::array();
      for (const auto& r : out.reports) reports.push_back(criterion::to_json(r));
      doc["reports"] = std::move(reports);
      const auto path = request.output / (std::string(stem) + ".json");
      write_file(path, doc.dump(2) + "\n");
      result.files.push_back(path);
    }
    if (request.format != Format::json) {
      const auto path = request.output / (std::string(stem) + ".csv");
      write_file(path, criterion::emit_convergence_table(std::span<const ConditionReport>(out.reports), sc.horizon()));
      result.files.push_back(path);
    }
  }
  result.exit_status = failed ? kExitFail : inconclusive ? kExitInconclusive : kExitPass;
  return result;
}

template <class V>
RunResult execute_scenario(criterion::ScenarioSpec<V> sc, const RunConfig& cfg, const RunRequest& request) {
  Executor<V> ex(std::move(sc), cfg);
  return execute_all(ex, cfg, request);
}

template <class S>
RunResult run_snake(const RunConfig& cfg, const RunRequest& request) {
  scenarios::SnakeScenarioConfig sc_cfg{
      operators::ShiftParams(cfg.lambda, spaces::parse_sequence_norm(cfg.space), cfg.budget), cfg.targets,
      cfg.horizon, cfg.horizons, {}};
  apply_tolerances(sc_cfg.tolerances, cfg);
  auto snake = scenarios::make_snake_scenario<S>(sc_cfg);
  return execute_scenario(std::move(snake.spec), cfg, request);
}

}  // namespace

RunResult run(RunConfig cfg, const RunRequest& request, std::ostream& diag) {
  try {
    if (!request.commands.empty()) cfg.commands = request.commands;
    if (request.mode) cfg.mode = *request.mode;
    if (request.horizon) cfg.horizon = *request.horizon;
    scenarios::validate_run_config(cfg);

    switch (cfg.scenario) {
      case scenarios::ScenarioKind::analytic: {
        scenarios::AnalyticScenarioConfig a;
        a.dense_count = cfg.dense_count;
        a.horizon = cfg.horizon;
        a.mesh_density = cfg.mesh_density;
        a.schedule_length = cfg.schedule_length;
        a.horizons = cfg.horizons;
        apply_tolerances(a.tolerances, cfg);
        return execute_scenario(scenarios::make_analytic_scenario(a), cfg, request);
      }
      case scenarios::ScenarioKind::snake:
        if (cfg.mode == scenarios::ArithmeticMode::exact) return run_snake<Rational>(cfg, request);
        return run_snake<spaces::Complex>(cfg, request);
      case scenarios::ScenarioKind::oracle: {
        auto sc = scenarios::make_oracle_shift(cfg.oracle_length, cfg.lambda, cfg.horizon, cfg.dense_count);
        sc.horizons = cfg.horizons;
        apply_tolerances(sc.tolerances, cfg);
        return execute_scenario(std::move(sc), cfg, request);
      }
    }
    throw Error("unknown scenario kind");
  } catch (const ConfigError& e) {
    diag << "seqhc: config error: " << e.what() << "\n";
  } catch (const SchedulingFailure& e) {
    diag << "seqhc: scheduling failure at target k = " << e.target() << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    diag << "seqhc: error: " << e.what() << "\n";
  }
  return {kExitError, {}};
}

RunResult run(const RunRequest& request, std::ostream& diag) {
  RunConfig cfg;
  try {
    cfg = scenarios::load_run_config(request.config_path.string());
  } catch (const ConfigError& e) {
    diag << "seqhc: config error in " << request.config_path.string() << ": " << e.what() << "\n";
    return {kExitError, {}};
  }
  return run(std::move(cfg), request, diag);
}

}  // namespace seqhc::cli
