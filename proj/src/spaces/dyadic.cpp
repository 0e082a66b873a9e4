#include "seqhc/spaces/dyadic.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "seqhc/errors.hpp"

namespace seqhc::spaces {

namespace {

constexpr std::int64_t kScaleLimit = std::int64_t{1} << 40;

int bit_width(std::uint64_t v) { return static_cast<int>(std::bit_width(v)); }

}  // namespace

DyadicExponent DyadicExponent::from_parts(std::uint64_t numerator, std::int64_t scale) {
  DyadicExponent q;
  if (numerator == 0) return q;
  const int tz = std::countr_zero(numerator);
  q.numerator_ = numerator >> tz;
  q.scale_ = scale - tz;
  if (q.scale_ > kScaleLimit || q.scale_ < -kScaleLimit)
    throw std::overflow_error("dyadic exponent scale out of range");
  return q;
}

DyadicExponent DyadicExponent::times_pow2(std::int64_t shift) const {
  if (is_zero()) return *this;
  return from_parts(numerator_, scale_ - shift);
}

double DyadicExponent::to_double() const {
  const auto s = scale_ > 4096 ? 4096 : (scale_ < -4096 ? -4096 : scale_);
  return std::ldexp(static_cast<double>(numerator_), static_cast<int>(-s));
}

std::string DyadicExponent::to_string() const {
  if (scale_ == 0) return std::to_string(numerator_);
  if (scale_ > 0) return std::to_string(numerator_) + "/2^" + std::to_string(scale_);
  return std::to_string(numerator_) + "*2^" + std::to_string(-scale_);
}

DyadicExponent operator+(const DyadicExponent& a, const DyadicExponent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t common = a.scale_ > b.scale_ ? a.scale_ : b.scale_;
  const std::int64_t shift_a = common - a.scale_;
  const std::int64_t shift_b = common - b.scale_;
  if (bit_width(a.numerator_) + shift_a > 63 || bit_width(b.numerator_) + shift_b > 63)
    throw std::overflow_error("dyadic exponent sum exceeds 64-bit numerator");
  const std::uint64_t sum = (a.numerator_ << shift_a) + (b.numerator_ << shift_b);
  return DyadicExponent::from_parts(sum, common);
}

std::strong_ordering operator<=>(const DyadicExponent& a, const DyadicExponent& b) {
  if (a.is_zero() || b.is_zero()) return a.numerator_ <=> b.numerator_;
  // Compare binary magnitudes first: value lies in [2^(w-1-s), 2^(w-s)).
  const std::int64_t mag_a = bit_width(a.numerator_) - a.scale_;
  const std::int64_t mag_b = bit_width(b.numerator_) - b.scale_;
  if (mag_a != mag_b) return mag_a <=> mag_b;
  // Equal magnitudes: aligning the smaller scale keeps both within 64 bits.
  if (a.scale_ == b.scale_) return a.numerator_ <=> b.numerator_;
  if (a.scale_ > b.scale_) return a.numerator_ <=> (b.numerator_ << (a.scale_ - b.scale_));
  return (a.numerator_ << (b.scale_ - a.scale_)) <=> b.numerator_;
}

std::complex<double> dyadic_power(std::complex<double> z, const DyadicExponent& q) {
  if (z.imag() == 0.0 && z.real() < 0.0)
    throw DomainError("point lies on the branch cut (-inf, 0)");
  if (q.is_zero()) return {1.0, 0.0};
  if (z == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};

  // q * Log z computed as numerator * Log z * 2^-scale so that huge or tiny q
  // never passes through an infinite or denormal double.
  const double num = static_cast<double>(q.numerator());
  const auto s = q.scale() > 4096 ? 4096 : (q.scale() < -4096 ? -4096 : q.scale());
  const double log_mod = std::ldexp(num * std::log(std::abs(z)), static_cast<int>(-s));
  if (log_mod < -745.0) return {0.0, 0.0};
  if (log_mod > 709.0)
    return {std::numeric_limits<double>::infinity(), 0.0};
  const double angle = std::ldexp(num * std::arg(z), static_cast<int>(-s));
  return std::polar(std::exp(log_mod), angle);
}

DyadicPolynomial::DyadicPolynomial(const Terms& terms) {
  for (const auto& [q, c] : terms) accumulate(q, c);
}

DyadicPolynomial DyadicPolynomial::monomial(const DyadicExponent& q, Coefficient c) {
  DyadicPolynomial f;
  f.accumulate(q, c);
  return f;
}

DyadicPolynomial::Coefficient DyadicPolynomial::coefficient(const DyadicExponent& q) const {
  const auto it = terms_.find(q);
  return it == terms_.end() ? Coefficient{} : it->second;
}

void DyadicPolynomial::accumulate(const DyadicExponent& q, Coefficient c) {
  if (c == Coefficient{}) return;
  auto [it, inserted] = terms_.try_emplace(q, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Coefficient{}) terms_.erase(it);
  }
}

DyadicPolynomial DyadicPolynomial::scale_exponents(std::int64_t shift) const {
  DyadicPolynomial out;
  // Multiplying by 2^shift is strictly monotone, so the order is preserved.
  for (const auto& [q, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), q.times_pow2(shift), c);
  return out;
}

DyadicPolynomial& DyadicPolynomial::operator+=(const DyadicPolynomial& other) {
  for (const auto& [q, c] : other.terms_) accumulate(q, c);
  return *this;
}

DyadicPolynomial& DyadicPolynomial::operator-=(const DyadicPolynomial& other) {
  for (const auto& [q, c] : other.terms_) accumulate(q, -c);
  return *this;
}

DyadicPolynomial& DyadicPolynomial::operator*=(Coefficient c) {
  if (c == Coefficient{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second == Coefficient{} ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

DyadicPolynomial operator*(const DyadicPolynomial& a, const DyadicPolynomial& b) {
  DyadicPolynomial out;
  for (const auto& [qa, ca] : a.terms_)
    for (const auto& [qb, cb] : b.terms_) out.accumulate(qa + qb, ca * cb);
  return out;
}

std::complex<double> eval_dyadic_poly(const DyadicPolynomial& f, std::complex<double> z) {
  if (z.imag() == 0.0 && z.real() < 0.0)
    throw DomainError("point lies on the branch cut (-inf, 0)");
  std::complex<double> sum{};
  for (const auto& [q, c] : f.terms()) sum += c * dyadic_power(z, q);
  return sum;
}

double modulus_bound(const DyadicPolynomial& f, double R) {
  double bound = 0.0;
  for (const auto& [q, c] : f.terms()) {
    const double r = q.is_zero() ? 1.0 : std::abs(dyadic_power({R, 0.0}, q));
    bound += std::abs(c) * r;
  }
  return bound;
}

}  // namespace seqhc::spaces
