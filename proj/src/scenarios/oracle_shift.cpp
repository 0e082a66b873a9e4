#include "seqhc/scenarios/oracle_shift.hpp"

#include <stdexcept>

#include "seqhc/errors.hpp"
#include "seqhc/operators/index_shift.hpp"
#include "seqhc/spaces/sequence_norm.hpp"

namespace seqhc::scenarios {

namespace {

using V = spaces::GridVector<Rational>;

operators::IndexVector<Rational> to_index(const V& v) {
  if (!v.in_row(1)) throw NotInSpaceError("oracle shift acts on row 1 only");
  operators::IndexVector<Rational> out;
  for (const auto& [cell, c] : v.entries()) out.emplace(cell.col - 1, c);
  return out;
}

V from_index(const operators::IndexVector<Rational>& v) {
  V out;
  for (const auto& [t, c] : v) out.add({1, t + 1}, c);
  return out;
}

}  // namespace

criterion::ScenarioSpec<V> make_oracle_shift(std::size_t length, const Rational& lambda, std::size_t horizon,
                                             std::size_t dense_count) {
  if (length == 0 || length > 10000) throw std::invalid_argument("oracle shift length must lie in [1, 10^4]");
  if (!(lambda > 1)) throw std::invalid_argument("shift weight lambda must satisfy lambda > 1");
  if (dense_count == 0) dense_count = length;

  criterion::ScenarioSpec<V> sc;
  sc.name = "oracle-shift";
  sc.apply_T = [lambda](const V& v, std::uint64_t n) {
    return from_index(operators::index_shift_backward(to_index(v), lambda, n));
  };
  sc.right_inverse = [lambda](std::uint64_t n, const V& v) {
    return from_index(operators::index_shift_forward(to_index(v), lambda, n));
  };
  for (std::size_t k = 1; k <= dense_count; ++k) sc.dense_prefix.push_back(V::basis({1, (k - 1) % length + 1}));
  for (std::size_t k = 1; k <= dense_count; ++k) sc.schedule.push_back(k * length);

  std::vector<spaces::Seminorm<V>> seminorms;
  const auto l1 = spaces::SequenceNorm::ell(1.0);
  for (std::size_t n = 1; n <= horizon; ++n)
    seminorms.push_back({"l1", [l1](const V& v) { return spaces::sequence_norm(v, l1); }});
  sc.y_space = spaces::GradedSpace<V>(std::move(seminorms));
  sc.y_membership = [](const V& v) { return v.in_row(1); };
  sc.tolerances = {1e-10, 1e-9, true};
  sc.provenance = {{"scenario", "oracle-shift"}, {"length", length}, {"lambda", seqhc::to_string(lambda)},
                   {"schedule", "n_k = k * length"}, {"space", "l1"}};
  return sc;
}

}  // namespace seqhc::scenarios
