#include "seqhc/scenarios/dense_family.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace seqhc::scenarios {

std::vector<Rational> height_values(std::uint64_t h) {
  std::vector<Rational> out;
  out.emplace_back(0);
  for (std::uint64_t q = 1; q <= h; ++q)
    for (std::uint64_t p = 1; p <= h; ++p)
      if (std::gcd(p, q) == 1) {
        out.emplace_back(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
        out.emplace_back(-Rational(static_cast<unsigned long>(p), static_cast<unsigned long>(q)));
      }
  std::stable_sort(out.begin() + 1, out.end(), [](const Rational& a, const Rational& b) {
    const auto key = [](const Rational& r) {
      return std::make_tuple(rational_height(r), r.get_den().get_ui(), mpz_class(abs(r.get_num())).get_ui(), r < 0);
    };
    return key(a) < key(b);
  });
  return out;
}

HeightEnumerator::HeightEnumerator(SlotCount slots, TupleHeight height)
    : slots_(std::move(slots)), height_fn_(std::move(height)) {
  enter_level(1);
}

void HeightEnumerator::enter_level(std::uint64_t h) {
  h_ = h;
  values_ = height_values(h);
  const std::size_t n = slots_(h);
  digits_.assign(n, 0);
  tuple_.assign(n, Rational(0));
}

bool HeightEnumerator::advance() {
  for (std::size_t s = 0; s < digits_.size(); ++s) {
    if (++digits_[s] < values_.size()) {
      tuple_[s] = values_[digits_[s]];
      return true;
    }
    digits_[s] = 0;
    tuple_[s] = values_[0];
  }
  return false;
}

const std::vector<Rational>& HeightEnumerator::next() {
  while (true) {
    if (!advance()) {
      enter_level(h_ + 1);
      continue;
    }
    if (height_fn_(h_, tuple_) == h_) return tuple_;
  }
}

std::vector<std::vector<Rational>> dense_polynomial_coefficients(std::size_t count) {
  HeightEnumerator en([](std::uint64_t h) { return static_cast<std::size_t>(h); },
                      [](std::uint64_t, const std::vector<Rational>& t) {
                        std::uint64_t h = 0;
                        for (std::size_t d = 0; d < t.size(); ++d)
                          if (t[d] != 0) h = std::max({h, static_cast<std::uint64_t>(d + 1), rational_height(t[d])});
                        return h;
                      });
  std::vector<std::vector<Rational>> out;
  out.reserve(count);
  while (out.size() < count) {
    auto coeffs = en.next();
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    out.push_back(std::move(coeffs));
  }
  return out;
}

spaces::DyadicPolynomial analytic_family_member(const std::vector<Rational>& p) {
  using spaces::DyadicExponent;
  using spaces::DyadicPolynomial;
  DyadicPolynomial f;
  for (std::size_t d = 0; d < p.size(); ++d) {
    if (p[d] == 0) continue;
    const double c = to_double(p[d]);
    f += DyadicPolynomial::monomial(DyadicExponent::integer(d + 1), c);
    f -= DyadicPolynomial::monomial(DyadicExponent::integer(d + 2), c);
  }
  return f;
}

std::vector<spaces::GridVector<Rational>> dense_grid_targets(std::size_t count) {
  HeightEnumerator en([](std::uint64_t h) { return static_cast<std::size_t>(h * h); },
                      [](std::uint64_t level, const std::vector<Rational>& t) {
                        std::uint64_t h = 0;
                        for (std::size_t s = 0; s < t.size(); ++s)
                          if (t[s] != 0)
                            h = std::max({h, s / level + 1, s % level + 1, rational_height(t[s])});
                        return h;
                      });
  std::vector<spaces::GridVector<Rational>> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto& t = en.next();
    const std::uint64_t level = en.height();
    spaces::GridVector<Rational> v;
    for (std::size_t s = 0; s < t.size(); ++s) v.add({s / level + 1, s % level + 1}, t[s]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace seqhc::scenarios
