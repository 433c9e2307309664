#pragma once

#include "tdks/grid.hpp"
#include "tdks/orbitals.hpp"
#include "tdks/potentials.hpp"
#include "tdks/types.hpp"

namespace tdks {

struct GroundStateOptions {
  int n_orbitals = 20;
  double occupancy = 2.0;
  double dtau = 0.25;
  double mixing = 0.3;          // weight of the fresh density in the update
  double tolerance = 1e-8;      // max per-iteration drift of any orbital energy
  long max_iterations = 100000;
  double init_half_width = 32;  // support of the sine-mode starting guesses
};

struct GroundStateResult {
  OrbitalSet orbitals;          // converged, purely real content stored complex
  Eigen::VectorXd energies;
  RealField density;
  MeanFieldPotential potential;
  long iterations = 0;
};

// Self-consistent ground state by imaginary-time relaxation: damp all
// orbitals with Crank-Nicolson in tau, re-orthonormalize lowest-first, mix
// the density into the mean field, repeat until the energies stop moving.
GroundStateResult solve_ground_state(const SpatialGrid& grid, const RealField& ionic,
                                     const HartreeSolver& hartree,
                                     const GroundStateOptions& options);

// Lowest n_states eigenstates of a fixed potential, again by imaginary time.
// Orthogonalization against the lower states keeps every excited level pinned.
struct BoundStates {
  RealOrbitalMatrix states;
  Eigen::VectorXd energies;
  long iterations = 0;
};

// Optional seed: columns already close to eigenstates (typically a converged
// occupied manifold) cut the iteration count down to whatever the remaining
// states need.
// When every wanted energy is positive, the implicit step is only selective
// for dtau < 2/sqrt(E_wanted * E_band) with E_band ~ 2/dx^2; attractive wells
// (negative energies) are safe at any dtau.
BoundStates relax_bound_states(const SpatialGrid& grid, const RealField& v,
                               int n_states, double dtau = 0.25,
                               double tolerance = 1e-10, long max_iterations = 200000,
                               const RealOrbitalMatrix* seed = nullptr);

// Same lowest states by direct dense diagonalization of the three-point
// Hamiltonian.  O(n^2) memory and much slower at production sizes; reference
// path and small-grid workhorse.
BoundStates diagonalize_bound_states(const SpatialGrid& grid, const RealField& v,
                                     int n_states);

}  // namespace tdks
