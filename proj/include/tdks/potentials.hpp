#pragma once

#include "tdks/grid.hpp"
#include "tdks/types.hpp"

namespace tdks {

// Soft-core interaction 1/sqrt(x^2 + s) used for both the ionic wells and the
// electron-electron kernel.
inline double soft_core(double x, double softening) {
  return 1.0 / std::sqrt(x * x + softening);
}

// Equispaced chain of identical ions centered on x = 0.
struct IonicLattice {
  int n_ions = 40;
  double spacing = 1.125;
  double softening = 1.0;
};

RealField lattice_positions(const IonicLattice& lattice);
RealField ionic_potential(const SpatialGrid& grid, const IonicLattice& lattice);

// Hartree potential via zero-padded FFT convolution with the soft-core
// kernel.  The padded kernel transform is cached at construction.
class HartreeSolver {
 public:
  HartreeSolver(const SpatialGrid& grid, double softening = 1.0);

  RealField operator()(const RealField& density) const;

 private:
  int n_ = 0;
  int n_pad_ = 0;
  double dx_ = 0.0;
  Eigen::VectorXcd kernel_fft_;
};

// Direct O(N^2) sum; reference for the FFT path.
RealField hartree_direct(const SpatialGrid& grid, const RealField& density,
                         double softening = 1.0);

// Exchange-only LDA of the 3D electron gas.
RealField exchange_potential(const RealField& density);

struct MeanFieldPotential {
  RealField hartree;
  RealField exchange;
  RealField total;  // ionic + hartree + exchange
};

MeanFieldPotential mean_field(const SpatialGrid& grid, const HartreeSolver& solver,
                              const RealField& ionic, const RealField& density);

}  // namespace tdks
