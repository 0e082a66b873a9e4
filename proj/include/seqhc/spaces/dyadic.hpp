#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace seqhc::spaces {

/// Nonnegative dyadic rational numerator / 2^scale. A negative scale encodes
/// numerator * 2^|scale|. Canonical form: numerator odd, or zero with scale 0.
class DyadicExponent {
 public:
  constexpr DyadicExponent() = default;

  /// Canonicalizes; the value is numerator / 2^scale.
  static DyadicExponent from_parts(std::uint64_t numerator, std::int64_t scale);
  static DyadicExponent integer(std::uint64_t value) { return from_parts(value, 0); }

  std::uint64_t numerator() const noexcept { return numerator_; }
  std::int64_t scale() const noexcept { return scale_; }
  bool is_zero() const noexcept { return numerator_ == 0; }

  /// value * 2^shift, exact.
  DyadicExponent times_pow2(std::int64_t shift) const;

  double to_double() const;
  std::string to_string() const;

  friend DyadicExponent operator+(const DyadicExponent& a, const DyadicExponent& b);
  friend std::strong_ordering operator<=>(const DyadicExponent& a, const DyadicExponent& b);
  friend bool operator==(const DyadicExponent& a, const DyadicExponent& b) = default;

 private:
  std::uint64_t numerator_ = 0;
  std::int64_t scale_ = 0;
};

/// z^q on the principal branch: exp(q Log z), with 0^0 = 1 and 0^q = 0 for q > 0.
/// Throws DomainError for z on (-inf, 0).
std::complex<double> dyadic_power(std::complex<double> z, const DyadicExponent& q);

/// Finite sum of c_q z^q over distinct dyadic exponents q >= 0. No zero
/// coefficients are stored.
class DyadicPolynomial {
 public:
  using Coefficient = std::complex<double>;
  using Terms = std::map<DyadicExponent, Coefficient>;

  DyadicPolynomial() = default;
  explicit DyadicPolynomial(const Terms& terms);

  static DyadicPolynomial monomial(const DyadicExponent& q, Coefficient c = 1.0);
  static DyadicPolynomial constant(Coefficient c) { return monomial(DyadicExponent{}, c); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Coefficient coefficient(const DyadicExponent& q) const;

  /// Replaces every exponent q by q * 2^shift; coefficients unchanged.
  DyadicPolynomial scale_exponents(std::int64_t shift) const;

  DyadicPolynomial& operator+=(const DyadicPolynomial& other);
  DyadicPolynomial& operator-=(const DyadicPolynomial& other);
  DyadicPolynomial& operator*=(Coefficient c);

  friend DyadicPolynomial operator+(DyadicPolynomial a, const DyadicPolynomial& b) { return a += b; }
  friend DyadicPolynomial operator-(DyadicPolynomial a, const DyadicPolynomial& b) { return a -= b; }
  friend DyadicPolynomial operator*(DyadicPolynomial a, Coefficient c) { return a *= c; }
  friend DyadicPolynomial operator*(Coefficient c, DyadicPolynomial a) { return a *= c; }
  friend DyadicPolynomial operator*(const DyadicPolynomial& a, const DyadicPolynomial& b);
  friend bool operator==(const DyadicPolynomial& a, const DyadicPolynomial& b) = default;

 private:
  void accumulate(const DyadicExponent& q, Coefficient c);

  Terms terms_;
};

std::complex<double> eval_dyadic_poly(const DyadicPolynomial& f, std::complex<double> z);

/// Sum of |c_q| R^q: bounds |f| on any set where |z| <= R.
double modulus_bound(const DyadicPolynomial& f, double R);

}  // namespace seqhc::spaces
