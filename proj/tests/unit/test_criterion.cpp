#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "seqhc/criterion/construction.hpp"
#include "seqhc/errors.hpp"
#include "seqhc/scenarios/analytic.hpp"
#include "seqhc/scenarios/oracle_shift.hpp"
#include "seqhc/scenarios/snake_scenario.hpp"

using namespace seqhc;
using namespace seqhc::criterion;
using namespace seqhc::scenarios;
using spaces::GridVector;

namespace {

using RV = GridVector<Rational>;

SnakeScenario<Rational> snake(std::size_t targets = 8, std::size_t horizon = 12) {
  SnakeScenarioConfig cfg;
  cfg.target_count = targets;
  cfg.horizon = horizon;
  return make_snake_scenario<Rational>(cfg);
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1e-300) == "1e-300");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  for (double v : {1.0 / 3.0, 2.0 / 7.0, 1e-17 * 3.3}) CHECK(std::stod(format_number(v)) == v);
}

TEST_CASE("convergence table") {
  ConditionReport empty;
  empty.condition_id = "i";
  CHECK(emit_convergence_table(empty, 3) == "condition,k,j,x,seminorm_1,seminorm_2,seminorm_3,fnorm,member,pass\n");

  const auto sc = make_oracle_shift(4, Rational(2), 3);
  const auto r = check_condition_iii(sc, 2);
  const auto csv = emit_convergence_table(r, 3);
  CHECK(csv.find("\niii,1,-1,1,0,0,0,0,1,1\n") != std::string::npos);
  CHECK(csv.find("0.0") == std::string::npos);
}

TEST_CASE("unprimed checkers on the oracle shift") {
  const auto sc = make_oracle_shift(20, Rational(2), 16, 20);
  CHECK(check_condition_i(sc, 1).samples.empty());
  CHECK(check_condition_i(sc, 1).verdict == Verdict::pass);
  const auto i = check_condition_i(sc, 8);
  CHECK(i.verdict == Verdict::pass);
  CHECK(i.samples.size() == 28);
  for (const auto& s : i.samples) CHECK(s.exact_zero);
  const auto ii = check_condition_ii(sc, 6, 8);
  CHECK(ii.verdict == Verdict::pass);
  for (const auto& s : ii.samples)
    CHECK(s.seminorms[0] == std::ldexp(1.0, -20 * static_cast<int>(s.j - s.k)));
  const auto iii = check_condition_iii(sc, 8);
  CHECK(iii.verdict == Verdict::pass);
  CHECK_FALSE(iii.witness);
}

TEST_CASE("snake scenario: unprimed checkers with the scenario schedule") {
  const auto s = snake(8, 16);
  // (i) holds by exact vanishing
  const auto i = check_condition_i(s.spec, 8);
  CHECK(i.verdict == Verdict::pass);
  for (const auto& smp : i.samples) CHECK(smp.exact_zero);
  CHECK(check_condition_iii(s.spec, 8).verdict == Verdict::pass);
  // k = 0 row of (ii): the series sum S_{l_j} x_j converges
  CHECK(check_condition_ii(s.spec, 0, 8).verdict == Verdict::pass);
}

TEST_CASE("snake scenario: primed conditions hold with exact zeros") {
  const auto s = snake();
  const auto r = check_corollary_conditions(s.spec, 8, 7);
  CHECK(r.i.verdict == Verdict::pass);
  CHECK(r.ii.verdict == Verdict::pass);
  CHECK(r.iii.verdict == Verdict::pass);
  for (const auto& seq : r.i.sequences) {
    REQUIRE(seq.settled_from);
    CHECK(*seq.settled_from <= std::max<std::int64_t>(seq.x, seq.j + 1));
  }
  for (const auto& smp : r.iii.samples) CHECK(smp.exact_zero);
}

TEST_CASE("primed sequence that never settles fails with a witness") {
  const auto s = snake();
  // tail index 8 = k_max: T^{l_k} S_{l_8} x vanishes for no k <= 8
  const auto r = check_corollary_conditions(s.spec, 8, 8);
  CHECK(r.i.verdict == Verdict::fail);
  REQUIRE(r.i.witness);
  CHECK(r.i.witness->j == 8);
}

TEST_CASE("negative control: scrambled schedule") {
  auto s = snake(8, 16);
  auto sc = s.spec;
  std::swap(sc.schedule[1], sc.schedule[8]);
  CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
  const auto r = check_condition_i(sc, 8);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE(r.witness);
  // n_8 = l_1 = 2: T^2 S_{l_2} x_2 = -(1/16) e_{1,3}, far outside V_16
  CHECK(r.witness->k == 8);
  CHECK(r.witness->j == 2);
  CHECK_FALSE(r.witness->member);
  CHECK(r.witness->seminorms[0] == 0.0625);
}

TEST_CASE("negative control: lambda = 1") {
  SnakeScenarioConfig cfg;
  cfg.params = operators::ShiftParams::unchecked(Rational(1), spaces::SequenceNorm::ell(1.0));
  const auto s = make_snake_scenario<Rational>(cfg);
  const auto r = check_condition_ii(s.spec, 0, 8);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE(r.witness);
  CHECK(r.witness->k == 0);
  CHECK_THROWS(build_partial_hypercyclic_vector(s.spec, 4));
}

TEST_CASE("negative control: perturbed right inverse") {
  auto sc = make_oracle_shift(20, Rational(2), 12, 20);
  const auto base = sc.right_inverse;
  const auto base_T = sc.apply_T;
  sc.right_inverse = [base](std::uint64_t n, const RV& x) {
    RV v = base(n, x);
    if (n == 60) v.add({1, 61}, Rational(1, 1000));
    return v;
  };
  const auto r = check_condition_iii(sc, 8);
  CHECK(r.verdict == Verdict::fail);
  REQUIRE(r.witness);
  CHECK(r.witness->k == 3);
}

TEST_CASE("replay errors are inconclusive") {
  auto sc = make_oracle_shift(20, Rational(2), 12, 20);
  sc.apply_T = [](const RV&, std::uint64_t) -> RV { throw EnumerationTooShort("enumeration too short"); };
  const auto r = check_condition_iii(sc, 3);
  CHECK(r.verdict == Verdict::inconclusive);
  REQUIRE(r.witness);
  CHECK(r.witness->note.find("too short") != std::string::npos);
}

TEST_CASE("partial hypercyclic vector, snake scenario") {
  const auto s = snake();
  const auto x1 = build_partial_hypercyclic_vector(s.spec, 1);
  CHECK(x1.value == s.spec.right_inverse(s.spec.exponent(1), s.spec.target(1)));

  const auto x = build_partial_hypercyclic_vector(s.spec, 8);
  CHECK(x.certificate.verdict == Verdict::pass);
  // x_N = sum_k sum_{j=m_k}^{n_k} lambda^{-l_k} alpha_j e_{1,j}
  RV expect;
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto& st = s.enumeration->stage(k);
    const auto& target = s.targets[k - 1];
    for (const auto& [cell, c] : target.entries()) {
      const auto t = *s.enumeration->index_of(cell) + st.l;
      const auto col = s.enumeration->position(t);
      CHECK(col.row == 1);
      CHECK(col.col >= st.m);
      CHECK(col.col <= st.n);
      expect.add(col, c * pow(Rational(2), -static_cast<std::int64_t>(st.l)));
    }
  }
  CHECK(x.value == expect);
  const auto x7 = build_partial_hypercyclic_vector(s.spec, 7);
  CHECK(spaces::fnorm(s.spec.y_space, x.value - x7.value) <= std::ldexp(1.0, -8));
}

TEST_CASE("orbit estimate, snake scenario in exact mode") {
  const auto s = snake();
  const auto x = build_partial_hypercyclic_vector(s.spec, 8);
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto smp = verify_orbit_estimate(s.spec, x, k);
    CHECK(smp.pass);
    CHECK(smp.radius == std::ldexp(1.0, 2 - static_cast<int>(k)));
    // x_k - T^{n_k} x_N = -T^{n_k} sum_{j>k} S_{n_j} x_j exactly
    RV tail;
    for (std::size_t j = k + 1; j <= 8; ++j)
      tail += s.spec.right_inverse(s.spec.exponent(j), s.spec.target(j));
    CHECK(s.spec.target(k) - s.spec.apply_T(x.value, s.spec.exponent(k)) ==
          RV{} - s.spec.apply_T(tail, s.spec.exponent(k)));
  }
  CHECK(verify_orbit_estimate(s.spec, x, 7).inconclusive);
  CHECK(verify_orbit_estimate(s.spec, x, 1).inconclusive);
  const auto range = verify_orbit_range(s.spec, x, 2, 7);
  CHECK(range.verdict == Verdict::inconclusive);
}

TEST_CASE("orbit estimate converges as N grows") {
  // fnorm(x_k - T^{n_k} x_N) is not monotone in N for l^1 (the tail adds mass),
  // but successive values differ by at most 2^-(N+1) and stay within V_{k-2}.
  const auto s = snake(10, 12);
  for (std::size_t k = 2; k <= 5; ++k) {
    double prev = -1.0;
    for (std::size_t N = k + 2; N <= 10; ++N) {
      const auto x = build_partial_hypercyclic_vector(s.spec, N);
      const auto smp = verify_orbit_estimate(s.spec, x, k);
      CHECK(smp.pass);
      if (prev >= 0) CHECK(std::abs(smp.fnorm - prev) <= std::ldexp(1.0, -static_cast<int>(N)) + 1e-15);
      prev = smp.fnorm;
    }
  }
}

TEST_CASE("density probe") {
  const auto sc = make_oracle_shift(20, Rational(2), 4, 20);
  const auto v = RV::basis({1, 5}, Rational(3));
  const auto r = density_probe(sc, v, v, 0);
  CHECK(r.best_n == 0);
  CHECK(r.best_distance == 0.0);

  // ties go to the smallest n: T^n of zero is zero for every n
  const auto z = density_probe(sc, RV{}, RV::basis({1, 1}), 10);
  CHECK(z.best_n == 0);
  CHECK(z.best_distance == 1.0);

  const auto s = snake();
  const auto x = build_partial_hypercyclic_vector(s.spec, 8);
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto p = density_probe(s.spec, x.value, s.spec.target(k), s.spec.exponent(k));
    CHECK(p.best_n == s.spec.exponent(k));
    CHECK(p.best_distance <= std::ldexp(1.0, 2 - static_cast<int>(k)));
  }
}

TEST_CASE("density probe equals exhaustive search on the oracle shift") {
  const std::size_t L = 20;
  const auto sc = make_oracle_shift(L, Rational(2), 4, L);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    RV x;
    RV target;
    std::vector<Rational> xd(3 * L, Rational(0)), td(3 * L, Rational(0));
    for (int i = 0; i < 4; ++i) {
      const std::uint64_t t = rng() % (2 * L);
      const Rational c(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 4));
      x.add({1, t + 1}, c);
      xd[t] += c;
      const std::uint64_t u = rng() % L;
      const Rational d(static_cast<long>(rng() % 3) - 1);
      target.add({1, u + 1}, d);
      td[u] += d;
    }
    const auto got = density_probe(sc, x, target, L);
    const auto want = oracle::exhaustive_probe(xd, td, Rational(2), L);
    CHECK(got.best_n == want.first);
    CHECK(got.best_distance == to_double(want.second));
  }
}

TEST_CASE("greedy diagonal schedule makes the unprimed conditions hold") {
  AnalyticScenarioConfig cfg;
  cfg.horizon = 16;
  const auto sc = make_analytic_scenario(cfg);
  const std::size_t K = 8;
  const auto sel = select_proposition_schedule(sc, K);
  REQUIRE(sel.schedule.size() == K + 1);
  for (std::size_t k = 1; k <= K; ++k) CHECK(sel.schedule[k] > sel.schedule[k - 1]);
  const auto chosen = with_schedule(sc, sel);
  chosen.validate();
  CHECK(chosen.provenance["proposition_schedule"]["rule"] == "greedy-diagonal");
  CHECK(check_condition_i(chosen, K).verdict == Verdict::pass);
  CHECK(check_condition_ii(chosen, K - 1, K).verdict == Verdict::pass);
  CHECK(check_condition_iii(chosen, K).verdict == Verdict::pass);

  // too few candidates
  AnalyticScenarioConfig tiny = cfg;
  tiny.schedule_length = 3;
  CHECK_THROWS_AS(select_proposition_schedule(make_analytic_scenario(tiny), K), SchedulingFailure);
}

TEST_CASE("horizon too small for the requested ball") {
  const auto sc = make_oracle_shift(20, Rational(2), 4, 20);
  const auto r = check_condition_i(sc, 3);
  CHECK(r.verdict == Verdict::inconclusive);
  REQUIRE(r.witness);
  CHECK(r.witness->note.find("V_6") != std::string::npos);
}

TEST_CASE("report json") {
  const auto sc = make_oracle_shift(4, Rational(2), 3);
  const auto r = check_condition_iii(sc, 1);
  const auto j = to_json(r);
  CHECK(j["condition"] == "iii");
  CHECK(j["verdict"] == "pass");
  CHECK(j["label"] == "pass (finite-horizon)");
  CHECK(j["witness"].is_null());
  CHECK(j["samples"][0]["exact_zero"] == true);
}
