#pragma once

#include <complex>
#include <concepts>

#include "seqhc/spaces/rational.hpp"

namespace seqhc::spaces {

using Complex = std::complex<double>;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& s) { return s == 0; }
  static Rational abs(const Rational& s) { return seqhc::Rational(::abs(s)); }
  static double magnitude(const Rational& s) { return to_double(abs(s)); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "complex-double";
  static Complex from_rational(const Rational& r) { return {to_double(r), 0.0}; }
  static bool is_zero(const Complex& s) { return s == Complex{}; }
  static double abs(const Complex& s) { return std::abs(s); }
  static double magnitude(const Complex& s) { return std::abs(s); }
};

template <class S>
concept Scalar = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { ScalarTraits<S>::magnitude(a) } -> std::convertible_to<double>;
};

}  // namespace seqhc::spaces
