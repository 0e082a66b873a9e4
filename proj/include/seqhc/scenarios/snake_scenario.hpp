#pragma once

#include <memory>
#include <vector>

#include "seqhc/criterion/scenario.hpp"
#include "seqhc/operators/snake.hpp"
#include "seqhc/scenarios/dense_family.hpp"
#include "seqhc/spaces/sequence_norm.hpp"
#include "seqhc/spaces/serialize.hpp"

namespace seqhc::scenarios {

struct SnakeScenarioConfig {
  operators::ShiftParams params{Rational(2), spaces::SequenceNorm::ell(1.0)};
  std::size_t target_count = 8;
  std::size_t horizon = 12;
  criterion::Horizons horizons;
  criterion::Tolerances tolerances{1e-10, 1e-9, true};
};

template <class S>
struct SnakeScenario {
  criterion::ScenarioSpec<spaces::GridVector<S>> spec;
  std::shared_ptr<const operators::SnakeEnumeration> enumeration;
  std::vector<spaces::GridVector<S>> targets;
  operators::ShiftParams params;
};

/// Seminorms of the embedded Y: the norm itself for l^p and c_0 (a constant
/// family), ||.||_1, ..., ||.||_H for s.
template <class S>
spaces::GradedSpace<spaces::GridVector<S>> sequence_space_seminorms(const spaces::SequenceNorm& norm,
                                                                    std::size_t horizon) {
  std::vector<spaces::Seminorm<spaces::GridVector<S>>> seminorms;
  for (std::size_t n = 1; n <= horizon; ++n) {
    spaces::SequenceNorm nm = norm;
    if (norm.kind == spaces::SequenceNorm::Kind::s) nm.k = static_cast<unsigned>(n);
    seminorms.push_back({nm.name(), [nm](const spaces::GridVector<S>& v) { return spaces::sequence_norm(v, nm); }});
  }
  return spaces::GradedSpace<spaces::GridVector<S>>(std::move(seminorms));
}

template <class S>
spaces::GridVector<S> convert_vector(const spaces::GridVector<Rational>& v) {
  if constexpr (std::is_same_v<S, Rational>) {
    return v;
  } else {
    spaces::GridVector<S> out;
    for (const auto& [cell, c] : v.entries()) out.add(cell, spaces::ScalarTraits<S>::from_rational(c));
    return out;
  }
}

/// Snake shift on the direct sum with targets from dense_grid_targets, the
/// enumeration built for them, n_k = l_k, and Y embedded as row 1. Throws
/// SchedulingFailure when the builder cannot respect the growth budget.
template <class S>
SnakeScenario<S> make_snake_scenario(const SnakeScenarioConfig& cfg) {
  using V = spaces::GridVector<S>;
  SnakeScenario<S> out{{}, nullptr, {}, cfg.params};

  const auto exact_targets = dense_grid_targets(cfg.target_count);
  for (const auto& t : exact_targets) out.targets.push_back(convert_vector<S>(t));
  out.enumeration = std::make_shared<const operators::SnakeEnumeration>(
      operators::build_snake_enumeration(std::span<const spaces::GridVector<Rational>>(exact_targets), cfg.params));

  auto& sc = out.spec;
  sc.name = "snake";
  const auto e = out.enumeration;
  const auto params = cfg.params;
  sc.apply_T = [e, params](const V& v, std::uint64_t n) { return operators::snake_apply_T(v, *e, params, n); };
  sc.right_inverse = [e, params](std::uint64_t n, const V& v) { return operators::snake_apply_S(v, *e, params, n); };
  sc.dense_prefix = out.targets;
  for (std::size_t k = 1; k <= cfg.target_count; ++k) sc.schedule.push_back(e->l(k));
  sc.y_space = sequence_space_seminorms<S>(cfg.params.space(), cfg.horizon);
  sc.y_membership = [](const V& v) { return v.in_row(1); };
  sc.horizons = cfg.horizons;
  sc.tolerances = cfg.tolerances;
  sc.tolerances.exact_zero_primed = cfg.tolerances.exact_zero_primed && spaces::ScalarTraits<S>::exact;

  criterion::json stages = criterion::json::array();
  for (const auto& s : e->stages())
    stages.push_back({{"k", s.k}, {"m_k", s.m}, {"n_k", s.n}, {"l_k", s.l}});
  criterion::json targets = criterion::json::array();
  for (const auto& t : exact_targets) targets.push_back(spaces::to_json(t));
  criterion::json budget = nullptr;
  if (cfg.params.budget())
    budget = {{"coefficient", cfg.params.budget()->coefficient}, {"power", cfg.params.budget()->power}};
  sc.provenance = {
      {"scenario", "snake"},
      {"lambda", seqhc::to_string(cfg.params.lambda())},
      {"space", cfg.params.space().name()},
      {"scalars", spaces::ScalarTraits<S>::name},
      {"dense_family", {{"id", kDenseFamilyId}, {"count", cfg.target_count}, {"targets", targets}}},
      {"builder", {{"policy", "support-then-row1-windows, diagonal fillers"}, {"budget", budget},
                   {"path_length", e->prefix_length()}}},
      {"schedule", stages},
  };
  return out;
}

}  // namespace seqhc::scenarios
