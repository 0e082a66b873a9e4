#pragma once

#include <complex>
#include <vector>

#include "seqhc/spaces/dyadic.hpp"

namespace seqhc::spaces {

/// Sample points of a closed disk: the boundary circle at 8*mesh_density
/// equispaced angles, concentric rings at radius*r/mesh_density carrying 8*r
/// points each, and the center. Doubling mesh_density yields a superset of
/// points.
class CompactDiskGrid {
 public:
  CompactDiskGrid(std::complex<double> center, double radius, int mesh_density);

  std::complex<double> center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  int mesh_density() const noexcept { return mesh_density_; }
  const std::vector<std::complex<double>>& points() const noexcept { return points_; }

  /// max |z| over the closed disk.
  double max_modulus() const noexcept { return std::abs(center_) + radius_; }

  /// True when the closed disk lies inside the open disk D(c, r).
  bool inside_open_disk(std::complex<double> c, double r) const noexcept;

 private:
  std::complex<double> center_;
  double radius_;
  int mesh_density_;
  std::vector<std::complex<double>> points_;
};

/// Discretized sup-seminorm p_K(f): max of |f| over the grid points.
double sup_on_grid(const DyadicPolynomial& f, const CompactDiskGrid& grid);

/// `count` equispaced points i/(count+1) of ]0,1[.
std::vector<double> interval_grid(std::size_t count);

}  // namespace seqhc::spaces
