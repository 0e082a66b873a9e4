#include "seqhc/scenarios/analytic.hpp"

#include <memory>
#include <stdexcept>

#include "seqhc/operators/composition.hpp"
#include "seqhc/scenarios/dense_family.hpp"

namespace seqhc::scenarios {

using spaces::DyadicPolynomial;

std::vector<spaces::CompactDiskGrid> exhaustion_grids(std::size_t horizon, int mesh_density) {
  std::vector<spaces::CompactDiskGrid> grids;
  grids.reserve(horizon);
  for (std::size_t j = 1; j <= horizon; ++j) {
    const double radius = 0.5 * (1.0 - 1.0 / static_cast<double>(j + 1));
    grids.emplace_back(std::complex<double>(0.5, 0.0), radius, mesh_density);
  }
  return grids;
}

criterion::ScenarioSpec<DyadicPolynomial> make_analytic_scenario(const AnalyticScenarioConfig& cfg) {
  if (cfg.horizon == 0) throw std::invalid_argument("analytic scenario needs at least one compact");
  if (cfg.dense_count == 0) throw std::invalid_argument("analytic scenario needs a nonempty dense family");

  criterion::ScenarioSpec<DyadicPolynomial> sc;
  sc.name = "analytic";
  sc.apply_T = [](const DyadicPolynomial& f, std::uint64_t n) { return operators::compose_square(f, n); };
  sc.right_inverse = [](std::uint64_t n, const DyadicPolynomial& f) { return operators::compose_gamma(f, n); };

  const auto coeffs = dense_polynomial_coefficients(cfg.dense_count);
  for (const auto& p : coeffs) sc.dense_prefix.push_back(analytic_family_member(p));

  sc.schedule.resize(cfg.schedule_length + 1);
  for (std::size_t k = 0; k <= cfg.schedule_length; ++k) sc.schedule[k] = k;

  auto grids = std::make_shared<const std::vector<spaces::CompactDiskGrid>>(
      exhaustion_grids(cfg.horizon, cfg.mesh_density));
  std::vector<spaces::Seminorm<DyadicPolynomial>> seminorms;
  for (std::size_t j = 0; j < grids->size(); ++j)
    seminorms.push_back({"sup_K" + std::to_string(j + 1),
                         [grids, j](const DyadicPolynomial& f) { return spaces::sup_on_grid(f, (*grids)[j]); }});
  sc.y_space = spaces::GradedSpace<DyadicPolynomial>(std::move(seminorms));
  // Dyadic polynomials restrict to holomorphic germs on U.
  sc.y_membership = [](const DyadicPolynomial&) { return true; };
  sc.horizons = cfg.horizons;
  sc.tolerances = cfg.tolerances;

  criterion::json radii = criterion::json::array();
  for (const auto& g : *grids) radii.push_back(g.radius());
  criterion::json family = criterion::json::array();
  for (std::size_t k = 0; k < std::min<std::size_t>(coeffs.size(), 8); ++k) {
    criterion::json p = criterion::json::array();
    for (const auto& c : coeffs[k]) p.push_back(to_string(c));
    family.push_back(p);
  }
  sc.provenance = {
      {"scenario", "analytic"},
      {"operator", "C_phi, phi(z) = z^2"},
      {"right_inverse", "C_gamma_n, gamma_n(z) = exp(2^-n Log z)"},
      {"dense_family", {{"id", kDenseFamilyId}, {"member", "z(1-z)p_n(z)"}, {"count", cfg.dense_count},
                        {"first_p_n", family}}},
      {"schedule", "n_k = k"},
      {"y_space", {{"seminorms", "sup over grid of K_j"}, {"center", 0.5}, {"radii", radii},
                   {"mesh_density", cfg.mesh_density}}},
  };
  return sc;
}

}  // namespace seqhc::scenarios
