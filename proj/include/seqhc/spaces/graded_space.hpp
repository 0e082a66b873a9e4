#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqhc/errors.hpp"

namespace seqhc::spaces {

template <class V>
struct Seminorm {
  std::string name;
  std::function<double(const V&)> eval;
};

/// Finite horizon p_1 <= p_2 <= ... <= p_H of an increasing seminorm family.
/// The F-norm sum_n 2^-n min(1, p_n) realizes the neighbourhood basis
/// V_n = { v : fnorm(v) <= 2^-n }.
template <class V>
class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<Seminorm<V>> seminorms) : seminorms_(std::move(seminorms)) {}

  std::size_t horizon() const noexcept { return seminorms_.size(); }

  /// 1-based, matching p_1 .. p_H.
  const Seminorm<V>& seminorm(std::size_t n) const { return seminorms_.at(n - 1); }
  const std::vector<Seminorm<V>>& seminorms() const noexcept { return seminorms_; }

  std::vector<double> values(const V& v) const {
    std::vector<double> out;
    out.reserve(seminorms_.size());
    for (const auto& p : seminorms_) out.push_back(p.eval(v));
    return out;
  }

 private:
  std::vector<Seminorm<V>> seminorms_;
};

/// sum_{n=1}^{H} 2^-n min(1, p_n) from precomputed seminorm values.
inline double fnorm_from_values(std::span<const double> values) {
  double sum = 0.0;
  double weight = 0.5;
  for (const double p : values) {
    sum += weight * std::min(1.0, p);
    weight *= 0.5;
  }
  return sum;
}

template <class V>
double fnorm(const GradedSpace<V>& space, const V& v) {
  const auto vals = space.values(v);
  return fnorm_from_values(vals);
}

/// Radius 2^-n of V_n. V_0 and V_{-1} are the whole budget {fnorm <= 1}.
inline double ball_radius(std::size_t horizon, long n) {
  if (n > static_cast<long>(horizon))
    throw HorizonExceeded("V_" + std::to_string(n) + " requested with only " +
                          std::to_string(horizon) + " seminorms materialized");
  return n <= 0 ? 1.0 : std::ldexp(1.0, static_cast<int>(-n));
}

/// fnorm(v) <= 2^-n. Stops evaluating seminorms once the partial sum exceeds
/// the radius.
template <class V>
bool ball_membership(const GradedSpace<V>& space, const V& v, long n) {
  const double radius = ball_radius(space.horizon(), n);
  double sum = 0.0;
  double weight = 0.5;
  for (const auto& p : space.seminorms()) {
    sum += weight * std::min(1.0, p.eval(v));
    if (sum > radius) return false;
    weight *= 0.5;
  }
  return true;
}

}  // namespace seqhc::spaces
