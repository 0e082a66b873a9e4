#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "seqhc/spaces/scalar.hpp"

namespace seqhc::spaces {

/// Position e_{row, col} of the countable direct sum; both indices start at 1.
struct Cell {
  std::uint64_t row = 1;
  std::uint64_t col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.row * 0x9E3779B97F4A7C15ULL ^ c.col);
  }
};

/// Finite-support vector of the direct sum, keyed by cell in row-major order.
/// Zero coefficients are never stored.
template <Scalar S>
class GridVector {
 public:
  using scalar_type = S;
  using Entries = std::map<Cell, S>;

  GridVector() = default;

  static GridVector basis(Cell cell, const S& coefficient = S(1)) {
    GridVector v;
    v.add(cell, coefficient);
    return v;
  }

  const Entries& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  S at(Cell cell) const {
    const auto it = entries_.find(cell);
    return it == entries_.end() ? S{} : it->second;
  }

  void add(Cell cell, const S& coefficient) {
    if (ScalarTraits<S>::is_zero(coefficient)) return;
    auto [it, inserted] = entries_.try_emplace(cell, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (ScalarTraits<S>::is_zero(it->second)) entries_.erase(it);
    }
  }

  std::set<std::uint64_t> support_rows() const {
    std::set<std::uint64_t> rows;
    for (const auto& [cell, c] : entries_) rows.insert(cell.row);
    return rows;
  }

  /// True when every stored entry lies in `row` (the zero vector qualifies).
  bool in_row(std::uint64_t row) const {
    for (const auto& [cell, c] : entries_)
      if (cell.row != row) return false;
    return true;
  }

  double max_magnitude() const {
    double m = 0.0;
    for (const auto& [cell, c] : entries_) m = std::max(m, ScalarTraits<S>::magnitude(c));
    return m;
  }

  GridVector& operator+=(const GridVector& other) {
    for (const auto& [cell, c] : other.entries_) add(cell, c);
    return *this;
  }
  GridVector& operator-=(const GridVector& other) {
    for (const auto& [cell, c] : other.entries_) add(cell, -c);
    return *this;
  }
  GridVector& operator*=(const S& factor) {
    if (ScalarTraits<S>::is_zero(factor)) {
      entries_.clear();
      return *this;
    }
    for (auto& [cell, c] : entries_) c *= factor;
    return *this;
  }

  friend GridVector operator+(GridVector a, const GridVector& b) { return a += b; }
  friend GridVector operator-(GridVector a, const GridVector& b) { return a -= b; }
  friend GridVector operator*(GridVector a, const S& f) { return a *= f; }
  friend GridVector operator*(const S& f, GridVector a) { return a *= f; }
  friend bool operator==(const GridVector& a, const GridVector& b) { return a.entries_ == b.entries_; }

 private:
  Entries entries_;
};

}  // namespace seqhc::spaces
