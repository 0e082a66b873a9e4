#include "seqhc/spaces/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace seqhc {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (const auto dot = s.find('.'); dot != std::string::npos) {
    if (s.find('/') != std::string::npos || s.find_first_of("eE") != std::string::npos)
      throw std::invalid_argument("unsupported rational literal '" + s + "'");
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("malformed decimal '" + s + "'");
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
      throw std::invalid_argument("malformed decimal '" + s + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent == 0) return Rational(1);
  const auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  if (exponent < 0) {
    if (num == 0) throw std::domain_error("zero to a negative power");
    std::swap(num, den);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double to_double(const Rational& value) {
  // mpq_get_d truncates; adequate for reporting, never used for exactness.
  return value.get_d();
}

std::uint64_t rational_height(const Rational& value) {
  if (value == 0) return 0;
  mpz_class num = abs(value.get_num());
  const mpz_class& den = value.get_den();
  const mpz_class& h = num > den ? num : den;
  if (!h.fits_ulong_p()) throw std::overflow_error("rational height exceeds 64 bits");
  return h.get_ui();
}

}  // namespace seqhc
