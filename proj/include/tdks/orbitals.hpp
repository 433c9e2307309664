#pragma once

#include "tdks/grid.hpp"
#include "tdks/types.hpp"

namespace tdks {

// Kohn-Sham orbital stack: one column per orbital, doubly occupied.
struct OrbitalSet {
  OrbitalMatrix phi;        // n_points x n_orbitals
  double occupancy = 2.0;

  int n_orbitals() const { return static_cast<int>(phi.cols()); }
  int n_points() const { return static_cast<int>(phi.rows()); }
};

inline RealField density(const OrbitalSet& orb) {
  return orb.occupancy * orb.phi.abs2().rowwise().sum();
}

inline double total_norm(const SpatialGrid& grid, const OrbitalSet& orb) {
  return integrate(grid, density(orb));
}

inline double dipole_moment(const SpatialGrid& grid, const OrbitalSet& orb) {
  return integrate(grid, (grid.x * density(orb)).eval());
}

// Central-difference derivative, one-sided at the ends.
template <class Field>
Field derivative(const SpatialGrid& grid, const Field& f) {
  const int n = grid.n_points;
  Field d(n);
  const double inv2dx = 1.0 / (2.0 * grid.dx);
  d[0] = (f[1] - f[0]) / grid.dx;
  for (int j = 1; j < n - 1; ++j) d[j] = (f[j + 1] - f[j - 1]) * inv2dx;
  d[n - 1] = (f[n - 1] - f[n - 2]) / grid.dx;
  return d;
}

// Physical current density in velocity gauge: sum over orbitals of
// Im(phi^* phi') plus the gauge term A n.
inline RealField current_density(const SpatialGrid& grid, const OrbitalSet& orb,
                                 double vector_potential) {
  RealField j = RealField::Zero(grid.n_points);
  for (int i = 0; i < orb.n_orbitals(); ++i) {
    ComplexField phi = orb.phi.col(i);
    ComplexField dphi = derivative(grid, phi);
    j += (phi.conjugate() * dphi).imag();
  }
  j *= orb.occupancy;
  j += vector_potential * density(orb);
  return j;
}

// <phi_a|phi_b> for every pair, with the grid measure.
template <class Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> gram_matrix(
    const SpatialGrid& grid,
    const Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>& phi) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = phi.matrix();
  return grid.dx * (m.adjoint() * m);
}

// Modified Gram-Schmidt, lowest column first.  Used after every
// imaginary-time step, where columns are ordered by energy.
template <class Scalar>
void orthonormalize(const SpatialGrid& grid,
                    Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>& phi) {
  const int m = static_cast<int>(phi.cols());
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < i; ++k) {
      Scalar overlap = grid.dx * (phi.col(k).conjugate() * phi.col(i)).sum();
      phi.col(i) -= overlap * phi.col(k);
    }
    double nrm = std::sqrt(std::abs(grid.dx * phi.col(i).abs2().sum()));
    if (nrm <= 0.0) throw std::runtime_error("orthonormalize: zero column");
    phi.col(i) /= nrm;
  }
}

}  // namespace tdks
