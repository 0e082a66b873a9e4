#pragma once

#include "seqhc/criterion/scenario.hpp"
#include "seqhc/spaces/grid_vector.hpp"

namespace seqhc::scenarios {

/// Index-level lambda-weighted backward shift on a single row (coordinate t
/// stored at column t+1). Dense family: the basis vectors e_0..e_{length-1}
/// repeated, schedule n_k = k * length, Y = l^1. Used as a brute-force oracle.
criterion::ScenarioSpec<spaces::GridVector<Rational>> make_oracle_shift(std::size_t length, const Rational& lambda,
                                                                        std::size_t horizon = 12,
                                                                        std::size_t dense_count = 0);

}  // namespace seqhc::scenarios
