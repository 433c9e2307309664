#pragma once

#include "tdks/absorber.hpp"
#include "tdks/drive.hpp"
#include "tdks/grid.hpp"
#include "tdks/orbitals.hpp"
#include "tdks/potentials.hpp"
#include "tdks/types.hpp"

namespace tdks {

struct PropagationOptions {
  double dt = 0.25;
  bool frozen_potential = false;  // keep the mean field fixed at its t=0 shape
  bool use_absorber = true;
  AbsorberSpec absorber;
};

// Real-time propagation of the orbital stack.  Each step is Crank-Nicolson
// with the vector potential taken at the interval midpoint; unless frozen,
// the mean field is updated predictor-corrector style: a trial step under
// V[n(t)] predicts n*, the step is then redone from t under V[(n(t)+n*)/2].
class Propagator {
 public:
  Propagator(const SpatialGrid& grid, RealField ionic, const HartreeSolver& hartree,
             OrbitalSet initial, Drive drive, PropagationOptions options);

  void step();
  void advance(long n_steps);

  double time() const { return time_; }
  long step_count() const { return step_count_; }
  double dt() const { return options_.dt; }
  double vector_potential() const { return drive_.vector_potential(time_); }
  double alpha() const { return alpha_; }
  const SpatialGrid& grid() const { return grid_; }
  const Drive& drive() const { return drive_; }
  const OrbitalSet& orbitals() const { return orbitals_; }
  const RealField& density() const { return density_; }
  const MeanFieldPotential& potential() const { return potential_; }

  // Drop back to a previously saved state (checkpoint restart).
  void restore(double time, long step_count, double alpha, OrbitalMatrix phi);

 private:
  void refresh_fields();

  SpatialGrid grid_;
  RealField ionic_;
  const HartreeSolver& hartree_;
  OrbitalSet orbitals_;
  Drive drive_;
  PropagationOptions options_;
  RealField mask_;
  MeanFieldPotential potential_;
  RealField density_;
  double time_ = 0.0;
  double alpha_ = 0.0;
  long step_count_ = 0;
};

}  // namespace tdks
