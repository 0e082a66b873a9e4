#pragma once

#include <cmath>
#include <string>

#include "seqhc/errors.hpp"
#include "seqhc/spaces/grid_vector.hpp"

namespace seqhc::spaces {

/// Norm of the Fréchet sequence space Y embedded as row 1 of the direct sum.
struct SequenceNorm {
  enum class Kind { ellp, c0, s };

  Kind kind = Kind::ellp;
  double p = 1.0;     // ellp only
  unsigned k = 0;     // s only: ||x||_k = sum |x_n| n^k

  static SequenceNorm ell(double p);
  static SequenceNorm c0() { return {Kind::c0, 1.0, 0}; }
  static SequenceNorm s(unsigned k) { return {Kind::s, 1.0, k}; }

  std::string name() const;

  friend bool operator==(const SequenceNorm&, const SequenceNorm&) = default;
};

/// Parses "l1", "l2.5", "c0", "s" (k defaults to `k`) or "s3".
SequenceNorm parse_sequence_norm(const std::string& text, unsigned k = 1);

namespace detail {

[[noreturn]] void throw_not_in_y();

template <class S>
double ellp_sum(const GridVector<S>& v, double p) {
  if constexpr (ScalarTraits<S>::exact) {
    if (p == std::floor(p) && p <= 64.0) {
      const auto e = static_cast<std::int64_t>(p);
      Rational sum = 0;
      for (const auto& [cell, c] : v.entries()) sum += pow(ScalarTraits<S>::abs(c), e);
      const double total = to_double(sum);
      return p == 1.0 ? total : std::pow(total, 1.0 / p);
    }
  }
  double sum = 0.0;
  for (const auto& [cell, c] : v.entries()) sum += std::pow(ScalarTraits<S>::magnitude(c), p);
  return p == 1.0 ? sum : std::pow(sum, 1.0 / p);
}

}  // namespace detail

/// Exact norm of the row-1 coordinates. Any support outside row 1 throws
/// NotInSpaceError: the vector is not in the embedded copy of Y.
template <class S>
double sequence_norm(const GridVector<S>& v, const SequenceNorm& norm) {
  if (!v.in_row(1)) detail::throw_not_in_y();
  switch (norm.kind) {
    case SequenceNorm::Kind::ellp:
      return detail::ellp_sum(v, norm.p);
    case SequenceNorm::Kind::c0:
      return v.max_magnitude();
    case SequenceNorm::Kind::s:
      if constexpr (ScalarTraits<S>::exact) {
        Rational sum = 0;
        for (const auto& [cell, c] : v.entries())
          sum += ScalarTraits<S>::abs(c) * pow(Rational(cell.col), norm.k);
        return to_double(sum);
      } else {
        double sum = 0.0;
        for (const auto& [cell, c] : v.entries())
          sum += ScalarTraits<S>::magnitude(c) * std::pow(static_cast<double>(cell.col), norm.k);
        return sum;
      }
  }
  return 0.0;
}

/// Exact value for rational vectors: l^1, c_0 and s norms only (other l^p
/// norms are irrational in general and throw DomainError).
inline Rational sequence_norm_exact(const GridVector<Rational>& v, const SequenceNorm& norm) {
  if (!v.in_row(1)) detail::throw_not_in_y();
  Rational out = 0;
  switch (norm.kind) {
    case SequenceNorm::Kind::ellp:
      if (norm.p != 1.0) throw DomainError("exact l^p norm only for p = 1");
      for (const auto& [cell, c] : v.entries()) out += abs(c);
      break;
    case SequenceNorm::Kind::c0:
      for (const auto& [cell, c] : v.entries()) out = std::max<Rational>(out, abs(c));
      break;
    case SequenceNorm::Kind::s:
      for (const auto& [cell, c] : v.entries()) out += abs(c) * pow(Rational(cell.col), norm.k);
      break;
  }
  return out;
}

}  // namespace seqhc::spaces
