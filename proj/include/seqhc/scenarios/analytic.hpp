#pragma once

#include <vector>

#include "seqhc/criterion/scenario.hpp"
#include "seqhc/spaces/disk_grid.hpp"
#include "seqhc/spaces/dyadic.hpp"

namespace seqhc::scenarios {

struct AnalyticScenarioConfig {
  /// Number of dense-family members x_1..x_count materialized.
  std::size_t dense_count = 16;
  /// Number of compacts K_1..K_H, one sup-seminorm each.
  std::size_t horizon = 12;
  int mesh_density = 16;
  /// Candidate exponents n_k = k for k <= schedule_length.
  std::size_t schedule_length = 256;
  criterion::Horizons horizons;
  criterion::Tolerances tolerances;
};

/// K_j = closed disk centered 1/2 with radius (1/2)(1 - 1/(j+1)), j = 1..horizon:
/// an increasing exhaustion of U = D(1/2, 1/2).
std::vector<spaces::CompactDiskGrid> exhaustion_grids(std::size_t horizon, int mesh_density);

/// T = C_{z^2}, S_n = C_{gamma_n}, x_n = z(1-z)p_n, Y = H(U) with the grid
/// sup-seminorms, n_k = k.
criterion::ScenarioSpec<spaces::DyadicPolynomial> make_analytic_scenario(const AnalyticScenarioConfig& cfg);

}  // namespace seqhc::scenarios
