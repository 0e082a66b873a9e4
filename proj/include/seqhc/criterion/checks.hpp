#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "seqhc/criterion/report.hpp"
#include "seqhc/criterion/scenario.hpp"

namespace seqhc::criterion {

namespace detail {

/// Seminorm profile of v in (Y, tau); fnorm is +inf outside Y.
template <class V>
Sample measure(const ScenarioSpec<V>& sc, const V& v) {
  Sample s;
  s.exact_zero = v.is_zero();
  s.in_y = s.exact_zero || sc.y_membership(v);
  s.fnorm = std::numeric_limits<double>::infinity();
  if (s.in_y) {
    try {
      s.seminorms = sc.y_space.values(v);
      s.fnorm = spaces::fnorm_from_values(s.seminorms);
    } catch (const NotInSpaceError&) {
      s.in_y = false;
    }
  }
  return s;
}

template <class V>
bool in_ball(const ScenarioSpec<V>& sc, const V& v, long n) {
  if (v.is_zero()) return true;
  if (!sc.y_membership(v)) return false;
  return spaces::ball_membership(sc.y_space, v, n);
}

/// T^{n_k} S_{n_j} x with n_0 = 0 meaning no application of T.
template <class V>
V transport(const ScenarioSpec<V>& sc, std::uint64_t t_power, std::uint64_t s_index_exponent, const V& x) {
  V v = sc.right_inverse(s_index_exponent, x);
  return t_power == 0 ? v : sc.apply_T(v, t_power);
}

inline void record(ConditionReport& report, Sample s) {
  if (s.inconclusive) {
    report.verdict = combine(report.verdict, Verdict::inconclusive);
    if (!report.witness) report.witness = s;
  } else if (!s.pass) {
    if (report.verdict != Verdict::fail) report.witness = s;
    report.verdict = Verdict::fail;
  }
  report.samples.push_back(std::move(s));
}

/// Membership of compute() in V_{ball}; replay errors mark the tuple inconclusive.
template <class V, class F>
Sample ball_tuple(const ScenarioSpec<V>& sc, std::int64_t k, std::int64_t j, std::int64_t x, long ball, F&& compute) {
  Sample s;
  try {
    const double radius = spaces::ball_radius(sc.horizon(), ball);
    s = measure(sc, compute());
    s.radius = radius;
    s.member = s.in_y && s.fnorm <= radius;
    s.pass = s.member;
  } catch (const Error& e) {
    s.inconclusive = true;
    s.note = e.what();
  }
  s.k = k;
  s.j = j;
  s.x = x;
  return s;
}

}  // namespace detail

/// T^{n_k} S_{n_j} x_j in V_{2k} for 2 <= k <= k_max, 1 <= j < k.
template <class V>
ConditionReport check_condition_i(const ScenarioSpec<V>& sc, std::size_t k_max) {
  ConditionReport report;
  report.condition_id = "i";
  for (std::size_t k = 2; k <= k_max; ++k)
    for (std::size_t j = 1; j < k; ++j)
      detail::record(report, detail::ball_tuple(sc, k, j, j, static_cast<long>(2 * k), [&] {
                       return detail::transport(sc, sc.exponent(k), sc.exponent(j), sc.target(j));
                     }));
  return report;
}

/// T^{n_k} S_{n_j} x_j in V_j for 0 <= k <= k_max, k < j <= tail_max. The k = 0
/// row certifies that sum_j S_{n_j} x_j converges in Y.
template <class V>
ConditionReport check_condition_ii(const ScenarioSpec<V>& sc, std::size_t k_max, std::size_t tail_max) {
  ConditionReport report;
  report.condition_id = "ii";
  for (std::size_t k = 0; k <= k_max; ++k)
    for (std::size_t j = k + 1; j <= tail_max; ++j)
      detail::record(report, detail::ball_tuple(sc, k, j, j, static_cast<long>(j), [&] {
                       return detail::transport(sc, sc.exponent(k), sc.exponent(j), sc.target(j));
                     }));
  return report;
}

/// x_k - T^{n_k} S_{n_k} x_k in V_k for 1 <= k <= k_max.
template <class V>
ConditionReport check_condition_iii(const ScenarioSpec<V>& sc, std::size_t k_max) {
  ConditionReport report;
  report.condition_id = "iii";
  for (std::size_t k = 1; k <= k_max; ++k)
    detail::record(report, detail::ball_tuple(sc, k, -1, k, static_cast<long>(k), [&] {
                     const auto n = sc.exponent(k);
                     return sc.target(k) - detail::transport(sc, n, n, sc.target(k));
                   }));
  return report;
}

namespace detail {

/// Tabulates term(k) for k = 1..k_max and summarizes eventual containment in Y
/// and decay below tolerance (or exact vanishing when `exact`).
template <class V, class F>
void primed_sequence(ConditionReport& report, const ScenarioSpec<V>& sc, std::int64_t j, std::int64_t x,
                     std::size_t k_max, bool exact, F&& term) {
  std::vector<Sample> seq;
  for (std::size_t k = 1; k <= k_max; ++k) {
    Sample s;
    try {
      s = measure(sc, term(k));
      s.member = s.in_y;
      bool small = s.in_y;
      if (exact)
        small = s.exact_zero;
      else
        for (const double p : s.seminorms) small = small && p < sc.tolerances.decay;
      s.pass = small;
    } catch (const Error& e) {
      s.inconclusive = true;
      s.note = e.what();
    }
    s.radius = exact ? 0.0 : sc.tolerances.decay;
    s.k = static_cast<std::int64_t>(k);
    s.j = j;
    s.x = x;
    seq.push_back(std::move(s));
  }

  SequenceSummary summary;
  summary.j = j;
  summary.x = x;
  bool contained = true;
  bool settled = true;
  bool errored = false;
  for (std::size_t idx = seq.size(); idx-- > 0;) {
    const auto& s = seq[idx];
    if (s.inconclusive) errored = true;
    contained = contained && s.in_y && !s.inconclusive;
    settled = settled && s.pass && !s.inconclusive;
    if (contained) summary.contained_from = s.k;
    if (settled) summary.settled_from = s.k;
  }
  if (summary.settled_from)
    summary.verdict = Verdict::pass;
  else
    summary.verdict = errored ? Verdict::inconclusive : Verdict::fail;

  if (summary.verdict != Verdict::pass && !seq.empty()) {
    const Sample& w = seq.back();
    if (summary.verdict == Verdict::fail && report.verdict != Verdict::fail) report.witness = w;
    if (summary.verdict == Verdict::inconclusive && !report.witness) report.witness = w;
  }
  report.verdict = combine(report.verdict, summary.verdict);
  for (auto& s : seq) report.samples.push_back(std::move(s));
  report.sequences.push_back(summary);
}

}  // namespace detail

struct CorollaryReports {
  ConditionReport i;
  ConditionReport ii;
  ConditionReport iii;

  Verdict verdict() const { return combine(i.verdict, combine(ii.verdict, iii.verdict)); }
};

/// (T^{n_k} S_{n_j} x_m)_k for 1 <= j, m <= tail_max, k = 1..k_max.
template <class V>
ConditionReport check_primed_i(const ScenarioSpec<V>& sc, std::size_t k_max, std::size_t tail_max) {
  ConditionReport r;
  r.condition_id = "i'";
  for (std::size_t j = 1; j <= tail_max; ++j)
    for (std::size_t m = 1; m <= tail_max; ++m)
      detail::primed_sequence(r, sc, j, m, k_max, sc.tolerances.exact_zero_primed, [&](std::size_t k) {
        return detail::transport(sc, sc.exponent(k), sc.exponent(j), sc.target(m));
      });
  return r;
}

/// (T^{n_j} S_{n_k} x_m)_k for 0 <= j <= tail_max, 1 <= m <= tail_max. Always
/// judged against decay_tol: the terms shrink but never vanish.
template <class V>
ConditionReport check_primed_ii(const ScenarioSpec<V>& sc, std::size_t k_max, std::size_t tail_max) {
  ConditionReport r;
  r.condition_id = "ii'";
  for (std::size_t j = 0; j <= tail_max; ++j)
    for (std::size_t m = 1; m <= tail_max; ++m)
      detail::primed_sequence(r, sc, j, m, k_max, false, [&](std::size_t k) {
        return detail::transport(sc, sc.exponent(j), sc.exponent(k), sc.target(m));
      });
  return r;
}

/// (x_m - T^{n_k} S_{n_k} x_m)_k for 1 <= m <= tail_max.
template <class V>
ConditionReport check_primed_iii(const ScenarioSpec<V>& sc, std::size_t k_max, std::size_t tail_max) {
  ConditionReport r;
  r.condition_id = "iii'";
  for (std::size_t m = 1; m <= tail_max; ++m)
    detail::primed_sequence(r, sc, -1, m, k_max, sc.tolerances.exact_zero_primed, [&](std::size_t k) {
      const auto n = sc.exponent(k);
      return sc.target(m) - detail::transport(sc, n, n, sc.target(m));
    });
  return r;
}

/// All three primed conditions; each sequence must lie in Y eventually and
/// tend to 0 (exactly, for (i)' and (iii)' when exact_zero_primed is set).
template <class V>
CorollaryReports check_corollary_conditions(const ScenarioSpec<V>& sc, std::size_t k_max, std::size_t tail_max) {
  return {check_primed_i(sc, k_max, tail_max), check_primed_ii(sc, k_max, tail_max),
          check_primed_iii(sc, k_max, tail_max)};
}

}  // namespace seqhc::criterion
