#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "seqhc/spaces/dyadic.hpp"
#include "seqhc/spaces/grid_vector.hpp"
#include "seqhc/spaces/rational.hpp"

namespace seqhc::scenarios {

/// Identifier recorded in reports for the enumerations below.
inline constexpr const char* kDenseFamilyId = "height-lex-v1";

/// Rationals p/q in lowest terms with max(|p|, q) <= h, ordered by
/// (height, q, |p|, positive first); zero leads.
std::vector<Rational> height_values(std::uint64_t h);

/// Lazy enumeration of nonzero rational tuples by height. At height h the
/// tuples have slots(h) entries drawn from height_values(h); they are visited
/// in lexicographic order with the first slot varying fastest, keeping only
/// those whose tuple height (as computed by `height`) is exactly h. Every
/// nonzero tuple of every height is produced exactly once.
class HeightEnumerator {
 public:
  using SlotCount = std::function<std::size_t(std::uint64_t h)>;
  using TupleHeight = std::function<std::uint64_t(std::uint64_t h, const std::vector<Rational>& tuple)>;

  HeightEnumerator(SlotCount slots, TupleHeight height);

  /// Next tuple; height() reports the level it came from.
  const std::vector<Rational>& next();
  std::uint64_t height() const noexcept { return h_; }

 private:
  void enter_level(std::uint64_t h);
  bool advance();

  SlotCount slots_;
  TupleHeight height_fn_;
  std::uint64_t h_ = 0;
  std::vector<Rational> values_;
  std::vector<std::size_t> digits_;
  std::vector<Rational> tuple_;
};

/// p_1, p_2, ...: coefficient vectors (index d is the z^d coefficient) of all
/// nonzero rational polynomials ordered by height max(deg + 1, coefficient heights).
std::vector<std::vector<Rational>> dense_polynomial_coefficients(std::size_t count);

/// x_n(z) = z (1 - z) p_n(z) as a dyadic polynomial.
spaces::DyadicPolynomial analytic_family_member(const std::vector<Rational>& p);

/// x_1, x_2, ...: all nonzero finite-support rational vectors of the direct sum,
/// ordered by height max(row, col, coefficient heights). |coefficient| <= k holds
/// for x_k.
std::vector<spaces::GridVector<Rational>> dense_grid_targets(std::size_t count);

}  // namespace seqhc::scenarios
