#pragma once

#include <cstdint>
#include <map>

#include "seqhc/spaces/rational.hpp"
#include "seqhc/spaces/scalar.hpp"

namespace seqhc::operators {

/// Coefficients indexed directly by path position t = 0, 1, 2, ...
template <class S>
using IndexVector = std::map<std::uint64_t, S>;

/// lambda-weighted backward shift along the index line, applied n times:
/// e_t -> lambda^n e_{t-n}, with e_t -> 0 for t < n.
template <class S>
IndexVector<S> index_shift_backward(const IndexVector<S>& v, const Rational& lambda, std::uint64_t n = 1) {
  const S factor = spaces::ScalarTraits<S>::from_rational(pow(lambda, static_cast<std::int64_t>(n)));
  IndexVector<S> out;
  for (const auto& [t, c] : v)
    if (t >= n) out.emplace(t - n, c * factor);
  return out;
}

/// e_t -> lambda^-n e_{t+n}
template <class S>
IndexVector<S> index_shift_forward(const IndexVector<S>& v, const Rational& lambda, std::uint64_t n = 1) {
  const S factor = spaces::ScalarTraits<S>::from_rational(pow(lambda, -static_cast<std::int64_t>(n)));
  IndexVector<S> out;
  for (const auto& [t, c] : v) out.emplace(t + n, c * factor);
  return out;
}

}  // namespace seqhc::operators
