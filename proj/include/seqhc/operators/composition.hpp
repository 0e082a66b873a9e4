#pragma once

#include <cstdint>

#include "seqhc/spaces/dyadic.hpp"

namespace seqhc::operators {

/// C_phi with phi(z) = z^2, applied `times` times: every exponent q becomes
/// q * 2^times. Exact.
spaces::DyadicPolynomial compose_square(const spaces::DyadicPolynomial& f, std::uint64_t times = 1);

/// C_{gamma_n} with gamma_n(z) = exp(2^-n Log z): every exponent q becomes
/// q / 2^n. n = 0 is the identity.
spaces::DyadicPolynomial compose_gamma(const spaces::DyadicPolynomial& f, std::uint64_t n);

}  // namespace seqhc::operators
