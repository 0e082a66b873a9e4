#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "seqhc/criterion/checks.hpp"

namespace seqhc::criterion {

template <class V>
struct PartialVector {
  std::size_t N = 0;
  /// x_N = sum_{j=1}^{N} S_{n_j} x_j
  V value;
  /// One row per M < N: fnorm(x_N - x_M) against sum_{j=M+1}^{N} 2^-j.
  ConditionReport certificate;
};

/// Partial sums of the hypercyclic vector. Every summand S_{n_j} x_j must lie
/// in Y and in V_j; otherwise the construction aborts naming j.
template <class V>
PartialVector<V> build_partial_hypercyclic_vector(const ScenarioSpec<V>& sc, std::size_t N) {
  std::vector<V> summands;
  summands.reserve(N);
  for (std::size_t j = 1; j <= N; ++j) {
    V s = sc.right_inverse(sc.exponent(j), sc.target(j));
    if (!s.is_zero() && !sc.y_membership(s))
      throw NotInSpaceError("summand S_{n_" + std::to_string(j) + "} x_" + std::to_string(j) + " is not in Y");
    if (!detail::in_ball(sc, s, static_cast<long>(j)))
      throw Error("summand S_{n_" + std::to_string(j) + "} x_" + std::to_string(j) +
                  " is not in V_" + std::to_string(j) + " (condition (ii) at k = 0)");
    summands.push_back(std::move(s));
  }

  PartialVector<V> out;
  out.N = N;
  out.certificate.condition_id = "build";

  // tail[M] = sum_{j=M+1}^{N} S_{n_j} x_j = x_N - x_M
  std::vector<V> tail(N + 1);
  for (std::size_t M = N; M-- > 0;) tail[M] = tail[M + 1] + summands[M];
  out.value = tail[0];

  for (std::size_t M = 0; M < N; ++M) {
    Sample s = detail::measure(sc, tail[M]);
    s.k = static_cast<std::int64_t>(M);
    s.j = static_cast<std::int64_t>(N);
    s.radius = std::ldexp(1.0, -static_cast<int>(M)) - std::ldexp(1.0, -static_cast<int>(N));
    s.member = s.in_y && s.fnorm <= s.radius * (1.0 + 1e-12);
    s.pass = s.member;
    detail::record(out.certificate, std::move(s));
  }
  return out;
}

/// fnorm(x_k - T^{n_k} x_N) against the radius 2^-(k-2) of V_{k-2}. Requires
/// 2 <= k <= N - margin; otherwise the sample is inconclusive.
template <class V>
Sample verify_orbit_estimate(const ScenarioSpec<V>& sc, const PartialVector<V>& x, std::size_t k) {
  Sample s;
  s.k = static_cast<std::int64_t>(k);
  s.j = static_cast<std::int64_t>(x.N);
  s.x = static_cast<std::int64_t>(k);
  if (k < 2 || k + sc.horizons.margin > x.N) {
    s.inconclusive = true;
    s.note = "k outside [2, N - margin]";
    return s;
  }
  try {
    const V diff = sc.target(k) - sc.apply_T(x.value, sc.exponent(k));
    const Sample m = detail::measure(sc, diff);
    s.seminorms = m.seminorms;
    s.fnorm = m.fnorm;
    s.in_y = m.in_y;
    s.exact_zero = m.exact_zero;
    s.radius = spaces::ball_radius(sc.horizon(), static_cast<long>(k) - 2);
    s.member = s.in_y && s.fnorm <= s.radius + sc.tolerances.estimate;
    s.pass = s.member;
  } catch (const Error& e) {
    s.inconclusive = true;
    s.note = e.what();
  }
  return s;
}

template <class V>
ConditionReport verify_orbit_range(const ScenarioSpec<V>& sc, const PartialVector<V>& x, std::size_t from,
                                   std::size_t to) {
  ConditionReport report;
  report.condition_id = "orbit";
  for (std::size_t k = from; k <= to; ++k) detail::record(report, verify_orbit_estimate(sc, x, k));
  return report;
}

struct ProbeResult {
  std::uint64_t best_n = 0;
  double best_distance = std::numeric_limits<double>::infinity();
};

/// argmin over 0 <= n <= n_max of the largest seminorm of T^n x - target;
/// points outside Y are at infinite distance. Ties go to the smallest n.
template <class V>
ProbeResult density_probe(const ScenarioSpec<V>& sc, const V& x, const V& target, std::uint64_t n_max) {
  ProbeResult best;
  V orbit = x;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (n > 0) orbit = sc.apply_T(orbit, 1);
    const V diff = orbit - target;
    double distance = 0.0;
    if (!diff.is_zero()) {
      if (!sc.y_membership(diff)) {
        distance = std::numeric_limits<double>::infinity();
      } else {
        for (const auto& p : sc.y_space.seminorms()) distance = std::max(distance, p.eval(diff));
      }
    }
    if (distance < best.best_distance) {
      best.best_distance = distance;
      best.best_n = n;
    }
  }
  return best;
}

struct ScheduleSelection {
  /// n_0 = 0, n_1, ..., n_K
  std::vector<std::uint64_t> schedule{0};
  /// For each k >= 1, the index into the candidate schedule that supplied n_k.
  std::vector<std::size_t> candidate_indices;
};

/// Greedy diagonal passage from primed data to the unprimed conditions: n_k is
/// the first remaining candidate exponent for which every requirement that
/// involves only indices <= k holds,
///   x_k - T^{n_k} S_{n_k} x_k in V_k,
///   T^{n_k} S_{n_j} x_j in V_{2k}  (j < k),
///   T^{n_i} S_{n_k} x_k in V_k     (i < k, n_0 = 0).
/// Candidates are the scenario's own schedule entries n_1, n_2, ...
template <class V>
ScheduleSelection select_proposition_schedule(const ScenarioSpec<V>& sc, std::size_t K) {
  ScheduleSelection sel;
  std::size_t cursor = 1;
  for (std::size_t k = 1; k <= K; ++k) {
    const V& xk = sc.target(k);
    bool found = false;
    for (; cursor < sc.schedule.size() && !found; ++cursor) {
      const std::uint64_t n = sc.schedule[cursor];
      const long kk = static_cast<long>(k);
      bool ok = detail::in_ball(sc, V(xk - detail::transport(sc, n, n, xk)), kk);
      for (std::size_t j = 1; ok && j < k; ++j)
        ok = detail::in_ball(sc, detail::transport(sc, n, sel.schedule[j], sc.target(j)), 2 * kk);
      for (std::size_t i = 0; ok && i < k; ++i)
        ok = detail::in_ball(sc, detail::transport(sc, sel.schedule[i], n, xk), kk);
      if (ok) {
        sel.schedule.push_back(n);
        sel.candidate_indices.push_back(cursor);
        found = true;
      }
    }
    if (!found)
      throw SchedulingFailure(k, "greedy selection exhausted " + std::to_string(sc.schedule.size() - 1) +
                                     " candidates at k = " + std::to_string(k));
  }
  return sel;
}

/// Copy of the scenario running on the selected subsequence.
template <class V>
ScenarioSpec<V> with_schedule(const ScenarioSpec<V>& sc, const ScheduleSelection& sel) {
  ScenarioSpec<V> out = sc;
  out.schedule = sel.schedule;
  json chosen = json::array();
  for (std::size_t k = 1; k < sel.schedule.size(); ++k) chosen.push_back(sel.schedule[k]);
  out.provenance["proposition_schedule"] = {{"rule", "greedy-diagonal"}, {"n_k", chosen}};
  return out;
}

}  // namespace seqhc::criterion
