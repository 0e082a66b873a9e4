#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "seqhc/errors.hpp"
#include "seqhc/spaces/grid_vector.hpp"
#include "seqhc/spaces/rational.hpp"
#include "seqhc/spaces/sequence_norm.hpp"

namespace seqhc::operators {

using spaces::Cell;
using spaces::GridVector;

/// n_k <= coefficient * k^power.
struct GrowthBudget {
  std::uint64_t coefficient = 3;
  unsigned power = 2;

  std::uint64_t limit(std::size_t k) const;
};

class ShiftParams {
 public:
  /// Rejects lambda <= 1. For the s space a missing budget defaults to 3k^2.
  ShiftParams(Rational lambda, spaces::SequenceNorm space,
              std::optional<GrowthBudget> budget = std::nullopt);

  /// Skips validation; only for negative controls.
  static ShiftParams unchecked(Rational lambda, spaces::SequenceNorm space);

  const Rational& lambda() const noexcept { return lambda_; }
  double lambda_double() const { return to_double(lambda_); }
  const spaces::SequenceNorm& space() const noexcept { return space_; }
  const std::optional<GrowthBudget>& budget() const noexcept { return budget_; }

 private:
  ShiftParams() = default;

  Rational lambda_;
  spaces::SequenceNorm space_;
  std::optional<GrowthBudget> budget_;
};

/// Placement of target k: its support occupies path indices
/// [support_first, support_last], the launch block (1,m)..(1,n) occupies the
/// same indices shifted by l.
struct StageRecord {
  std::size_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t l = 0;
  std::uint64_t support_first = 0;
  std::uint64_t support_last = 0;
  /// Largest support path index over targets 1..k.
  std::uint64_t reach = 0;
};

/// Prefix q(0), q(1), ... of a bijection N -> N x N with q(0) = (1,1). The
/// snake map is f(q(t)) = q(t-1). Past the built prefix the path continues
/// along the unused row-1 columns, so positions are defined for every t.
/// Immutable once built.
class SnakeEnumeration {
 public:
  /// Enumeration for an empty target list: q(t) = (1, t+1).
  SnakeEnumeration();

  Cell position(std::uint64_t t) const;
  /// nullopt for cells that are neither built nor on the row-1 continuation.
  std::optional<std::uint64_t> index_of(Cell cell) const;

  std::uint64_t prefix_length() const noexcept { return path_.size(); }
  std::uint64_t frontier() const noexcept { return frontier_; }
  const std::vector<Cell>& path() const noexcept { return path_; }

  std::size_t stage_count() const noexcept { return stages_.size(); }
  const std::vector<StageRecord>& stages() const noexcept { return stages_; }
  /// 1-based; throws ScheduleMissing.
  const StageRecord& stage(std::size_t k) const;
  /// l_k with l_0 = 0.
  std::uint64_t l(std::size_t k) const;

  /// "t i j" lines for the prefix followed by the "k m_k n_k l_k" table.
  std::string dump() const;

 private:
  friend class SnakeBuilder;

  std::vector<Cell> path_;
  std::unordered_map<Cell, std::uint64_t, spaces::CellHash> inverse_;
  std::uint64_t frontier_ = 2;
  // Row-1 columns >= frontier_ already on the path (visited as target support).
  std::set<std::uint64_t> row1_ahead_;
  std::vector<StageRecord> stages_;
};

struct TargetShape {
  std::vector<Cell> support;  // row-major
  double max_magnitude = 0.0;
};

SnakeEnumeration build_snake_enumeration(std::span<const TargetShape> targets, const ShiftParams& params);

template <class S>
TargetShape target_shape(const GridVector<S>& v) {
  TargetShape shape;
  for (const auto& [cell, c] : v.entries()) shape.support.push_back(cell);
  shape.max_magnitude = v.max_magnitude();
  return shape;
}

/// Lays the targets x_1, x_2, ... along the path and fixes (m_k, n_k, l_k) so
/// that T^{l_k} maps the row-1 block lambda^{-l_k} sum alpha_j e_{1,j} onto x_k.
template <class S>
SnakeEnumeration build_snake_enumeration(std::span<const GridVector<S>> targets, const ShiftParams& params) {
  std::vector<TargetShape> shapes;
  shapes.reserve(targets.size());
  for (const auto& t : targets) shapes.push_back(target_shape(t));
  return build_snake_enumeration(std::span<const TargetShape>(shapes), params);
}

/// T^n: the coefficient at q(t) moves to q(t-n) times lambda^n; indices t < n
/// fall into the sink and vanish.
template <class S>
GridVector<S> snake_apply_T(const GridVector<S>& v, const SnakeEnumeration& e,
                            const ShiftParams& params, std::uint64_t n = 1) {
  GridVector<S> out;
  if (v.is_zero()) return out;
  const S factor = spaces::ScalarTraits<S>::from_rational(pow(params.lambda(), static_cast<std::int64_t>(n)));
  for (const auto& [cell, c] : v.entries()) {
    const auto t = e.index_of(cell);
    if (!t) throw EnumerationTooShort("enumeration too short: cell (" + std::to_string(cell.row) + "," +
                                      std::to_string(cell.col) + ") is not enumerated");
    if (*t < n) continue;
    out.add(e.position(*t - n), c * factor);
  }
  return out;
}

/// S^n: the coefficient at q(t) moves to q(t+n) times lambda^-n.
template <class S>
GridVector<S> snake_apply_S(const GridVector<S>& v, const SnakeEnumeration& e,
                            const ShiftParams& params, std::uint64_t n = 1) {
  GridVector<S> out;
  if (v.is_zero()) return out;
  const S factor = spaces::ScalarTraits<S>::from_rational(pow(params.lambda(), -static_cast<std::int64_t>(n)));
  for (const auto& [cell, c] : v.entries()) {
    const auto t = e.index_of(cell);
    if (!t) throw EnumerationTooShort("enumeration too short: cell (" + std::to_string(cell.row) + "," +
                                      std::to_string(cell.col) + ") is not enumerated");
    out.add(e.position(*t + n), c * factor);
  }
  return out;
}

template <class S>
struct TransportedBlock {
  GridVector<S> value;
  /// k > i + j: the value must sit in row 1 and obey the coefficient bound.
  bool required = false;
  bool in_row1 = false;
  /// i * lambda^{-(l_k - l_j)}
  double coefficient_bound = 0.0;
  bool bound_holds = false;
  /// Row-1 columns reached by the shifted support span of x_i (empty when
  /// those indices are not all in row 1).
  std::vector<std::uint64_t> block_columns;
};

/// T^{l_j} S_{l_k} x_i by replay, with targets[i-1] = x_i and l_0 = 0.
template <class S>
TransportedBlock<S> transported_block(std::size_t i, std::size_t j, std::size_t k,
                                      std::span<const GridVector<S>> targets,
                                      const SnakeEnumeration& e, const ShiftParams& params) {
  if (i == 0 || i > targets.size()) throw ScheduleMissing("target x_" + std::to_string(i) + " not available");
  const std::uint64_t lk = e.l(k);
  const std::uint64_t lj = e.l(j);
  const auto& x = targets[i - 1];

  TransportedBlock<S> out;
  out.value = snake_apply_T(snake_apply_S(x, e, params, lk), e, params, lj);
  out.required = k > i + j;
  out.in_row1 = out.value.in_row(1);

  const Rational bound = Rational(static_cast<unsigned long>(i)) *
                         pow(params.lambda(), -(static_cast<std::int64_t>(lk) - static_cast<std::int64_t>(lj)));
  out.coefficient_bound = to_double(bound);
  out.bound_holds = out.in_row1;
  for (const auto& [cell, c] : out.value.entries()) {
    if constexpr (spaces::ScalarTraits<S>::exact) {
      if (spaces::ScalarTraits<S>::abs(c) > bound) out.bound_holds = false;
    } else {
      if (spaces::ScalarTraits<S>::magnitude(c) > out.coefficient_bound * (1.0 + 1e-12)) out.bound_holds = false;
    }
  }

  if (lk >= lj && !x.is_zero()) {
    std::uint64_t first = UINT64_MAX;
    std::uint64_t last = 0;
    for (const auto& [cell, c] : x.entries()) {
      const auto t = *e.index_of(cell);
      first = std::min(first, t);
      last = std::max(last, t);
    }
    std::vector<std::uint64_t> cols;
    bool row1 = true;
    for (std::uint64_t t = first + lk - lj; t <= last + lk - lj; ++t) {
      const Cell c = e.position(t);
      if (c.row != 1) {
        row1 = false;
        break;
      }
      cols.push_back(c.col);
    }
    if (row1) out.block_columns = std::move(cols);
  }
  return out;
}

}  // namespace seqhc::operators
