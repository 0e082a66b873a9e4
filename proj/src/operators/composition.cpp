#include "seqhc/operators/composition.hpp"

#include <stdexcept>

namespace seqhc::operators {

namespace {

std::int64_t checked_shift(std::uint64_t n) {
  if (n > (std::uint64_t{1} << 40)) throw std::overflow_error("composition power too large");
  return static_cast<std::int64_t>(n);
}

}  // namespace

spaces::DyadicPolynomial compose_square(const spaces::DyadicPolynomial& f, std::uint64_t times) {
  return f.scale_exponents(checked_shift(times));
}

spaces::DyadicPolynomial compose_gamma(const spaces::DyadicPolynomial& f, std::uint64_t n) {
  return f.scale_exponents(-checked_shift(n));
}

}  // namespace seqhc::operators
