#pragma once

#include <cmath>
#include <stdexcept>

#include "tdks/types.hpp"

namespace tdks {

/// Uniform 1D grid centered on the cluster: x(j) = -n*dx/2 + j*dx.
struct SpatialGrid {
  int n_points = 0;
  double dx = 0.0;
  RealField x;

  double x_min() const { return x[0]; }
  double x_max() const { return x[n_points - 1]; }
  double length() const { return n_points * dx; }

  // Index of the node nearest to position xq.
  int index_of(double xq) const {
    int j = static_cast<int>(std::lround((xq - x[0]) / dx));
    if (j < 0 || j >= n_points) throw std::out_of_range("position outside grid");
    return j;
  }
};

inline SpatialGrid make_grid(int n_points, double dx) {
  if (n_points < 4 || n_points % 2 != 0)
    throw std::invalid_argument("grid: n_points must be even and >= 4");
  if (!(dx > 0.0)) throw std::invalid_argument("grid: dx must be positive");
  SpatialGrid g;
  g.n_points = n_points;
  g.dx = dx;
  g.x = -0.5 * n_points * dx + dx * RealField::LinSpaced(n_points, 0.0, n_points - 1.0);
  return g;
}

// Riemann sum; adequate for decaying integrands on a uniform grid.
template <class Derived>
auto integrate(const SpatialGrid& grid, const Eigen::DenseBase<Derived>& f) {
  return grid.dx * f.sum();
}

}  // namespace tdks
