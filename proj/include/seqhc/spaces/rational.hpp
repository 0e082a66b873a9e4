#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seqhc {

using Rational = mpq_class;

/// Parses "3", "-3/4" or a plain decimal such as "1.25" into a canonical rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// base^exponent for any signed exponent; base must be nonzero when exponent < 0.
Rational pow(const Rational& base, std::int64_t exponent);

/// Nearest double (0 on underflow).
double to_double(const Rational& value);

/// max(|numerator|, denominator) of the reduced fraction; 0 for zero.
std::uint64_t rational_height(const Rational& value);

}  // namespace seqhc
