#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqhc/errors.hpp"
#include "seqhc/spaces/graded_space.hpp"

namespace seqhc::criterion {

using json = nlohmann::ordered_json;

struct Horizons {
  std::size_t k_max = 6;
  std::size_t tail_max = 8;
  /// verify_orbit_estimate requires k <= N - margin.
  std::size_t margin = 2;
};

struct Tolerances {
  double decay = 1e-8;
  double estimate = 1e-9;
  /// Primed conditions (i)' and (iii)' settle only on exactly zero vectors.
  bool exact_zero_primed = false;
};

/// One instance of the criterion: operator T, dense family x_1, x_2, ...,
/// right inverses S_n, exponent schedule n_0 = 0 < n_1 < ..., and the F-space
/// (Y, tau) given by its seminorms and membership predicate.
template <class V>
struct ScenarioSpec {
  std::string name;
  /// T^n
  std::function<V(const V&, std::uint64_t)> apply_T;
  /// S_n x
  std::function<V(std::uint64_t, const V&)> right_inverse;
  /// x_1, x_2, ... (index 0 holds x_1)
  std::vector<V> dense_prefix;
  /// n_0, n_1, ... with n_0 = 0
  std::vector<std::uint64_t> schedule{0};
  spaces::GradedSpace<V> y_space;
  std::function<bool(const V&)> y_membership;
  Horizons horizons;
  Tolerances tolerances;
  /// Self-description carried into every report.
  json provenance = json::object();

  const V& target(std::size_t k) const {
    if (k == 0 || k > dense_prefix.size())
      throw ScheduleMissing("dense family prefix has no x_" + std::to_string(k));
    return dense_prefix[k - 1];
  }

  std::uint64_t exponent(std::size_t k) const {
    if (k >= schedule.size()) throw ScheduleMissing("schedule has no n_" + std::to_string(k));
    return schedule[k];
  }

  std::size_t horizon() const { return y_space.horizon(); }

  /// Throws std::invalid_argument when n_0 != 0 or the schedule is not
  /// strictly increasing.
  void validate() const {
    if (schedule.empty() || schedule[0] != 0) throw std::invalid_argument("schedule must start at n_0 = 0");
    for (std::size_t k = 1; k < schedule.size(); ++k)
      if (schedule[k] <= schedule[k - 1])
        throw std::invalid_argument("schedule not strictly increasing at k = " + std::to_string(k));
  }
};

}  // namespace seqhc::criterion
