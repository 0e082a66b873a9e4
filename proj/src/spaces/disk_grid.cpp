#include "seqhc/spaces/disk_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seqhc::spaces {

CompactDiskGrid::CompactDiskGrid(std::complex<double> center, double radius, int mesh_density)
    : center_(center), radius_(radius), mesh_density_(mesh_density) {
  if (!(radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
  if (mesh_density < 1) throw std::invalid_argument("mesh density must be positive");

  points_.push_back(center);
  for (int ring = 1; ring <= mesh_density; ++ring) {
    const double r = ring == mesh_density ? radius : radius * ring / mesh_density;
    const int count = 8 * ring;
    for (int i = 0; i < count; ++i) {
      const double angle = 2.0 * std::numbers::pi * i / count;
      points_.push_back(center + std::polar(r, angle));
    }
  }
}

bool CompactDiskGrid::inside_open_disk(std::complex<double> c, double r) const noexcept {
  return std::abs(center_ - c) + radius_ < r;
}

double sup_on_grid(const DyadicPolynomial& f, const CompactDiskGrid& grid) {
  if (f.is_zero()) return 0.0;
  double sup = 0.0;
  for (const auto& z : grid.points()) sup = std::max(sup, std::abs(eval_dyadic_poly(f, z)));
  return sup;
}

std::vector<double> interval_grid(std::size_t count) {
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i)
    xs[i] = static_cast<double>(i + 1) / static_cast<double>(count + 1);
  return xs;
}

}  // namespace seqhc::spaces
