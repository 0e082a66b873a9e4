#pragma once

// Brute-force reference implementations used to cross-check the library.
// Nothing here calls into the code under test except for plain data types.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "seqhc/spaces/dyadic.hpp"
#include "seqhc/spaces/grid_vector.hpp"

namespace oracle {

using Complex = std::complex<double>;

/// sum c * z^q with z^q = exp(q log z), principal log from std::log.
inline Complex eval_poly(const seqhc::spaces::DyadicPolynomial& f, Complex z) {
  Complex sum = 0.0;
  for (const auto& [q, c] : f.terms()) {
    const double e = std::ldexp(static_cast<double>(q.numerator()), -static_cast<int>(q.scale()));
    if (q.is_zero()) {
      sum += c;
    } else if (z == Complex{}) {
      continue;
    } else {
      sum += c * std::exp(e * std::log(z));
    }
  }
  return sum;
}

/// Max modulus over a polar sample of the closed disk.
inline double sup_polar(const seqhc::spaces::DyadicPolynomial& f, Complex center, double radius, int rings,
                        int spokes) {
  double best = std::abs(eval_poly(f, center));
  for (int r = 1; r <= rings; ++r)
    for (int s = 0; s < spokes; ++s) {
      const double th = 2.0 * M_PI * s / spokes;
      const Complex z = center + std::polar(radius * r / rings, th);
      best = std::max(best, std::abs(eval_poly(f, z)));
    }
  return best;
}

/// Weighted backward shift on coefficient lists indexed by t = 0, 1, ...:
/// (T^n x)[t] = lambda^n x[t + n], computed directly for each n.
template <class T>
std::vector<T> shift_power(const std::vector<T>& x, const T& lambda, std::size_t n) {
  T factor = 1;
  for (std::size_t i = 0; i < n; ++i) factor *= lambda;
  std::vector<T> out(x.size(), T(0));
  for (std::size_t t = n; t < x.size(); ++t) out[t - n] = factor * x[t];
  return out;
}

template <class T>
T l1(const std::vector<T>& v) {
  T s = 0;
  for (const T& a : v) s += a < 0 ? T(-a) : a;
  return s;
}

/// argmin_n ||T^n x - target||_1 over 0 <= n <= n_max by exhaustive scan;
/// the first minimum wins.
template <class T>
std::pair<std::size_t, T> exhaustive_probe(const std::vector<T>& x, const std::vector<T>& target, const T& lambda,
                                           std::size_t n_max) {
  std::size_t best_n = 0;
  std::optional<T> best;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto y = shift_power(x, lambda, n);
    std::vector<T> d(std::max(y.size(), target.size()), T(0));
    for (std::size_t t = 0; t < d.size(); ++t)
      d[t] = (t < y.size() ? y[t] : T(0)) - (t < target.size() ? target[t] : T(0));
    const T dist = l1(d);
    if (!best || dist < *best) {
      best = dist;
      best_n = n;
    }
  }
  return {best_n, *best};
}

/// s-norm sum |v_j| j^k of a row vector given as column -> value.
inline double s_norm(const std::map<std::uint64_t, double>& row, unsigned k) {
  double s = 0.0;
  for (const auto& [j, a] : row) s += std::abs(a) * std::pow(static_cast<double>(j), k);
  return s;
}

/// sum_{n=1}^{H} 2^-n min(1, p_n)
inline double fnorm(const std::vector<double>& p) {
  double s = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) s += std::pow(0.5, static_cast<double>(n + 1)) * std::min(1.0, p[n]);
  return s;
}

}  // namespace oracle
