#pragma once

#include <string>

#include "tdks/config.hpp"
#include "tdks/dynamics.hpp"
#include "tdks/groundstate.hpp"
#include "tdks/grid.hpp"
#include "tdks/linresp.hpp"
#include "tdks/potentials.hpp"
#include "tdks/tsurff.hpp"

namespace tdks {

// Everything derived from the static part of a config: grid, lattice field,
// Hartree machinery.  Built once, threaded through each command.
struct Workspace {
  RunConfig config;
  SpatialGrid grid;
  RealField ionic;
  HartreeSolver hartree;
};

Workspace make_workspace(RunConfig config);

// Converged occupied manifold plus the level table extended by the
// configured number of unoccupied states (relaxed in the frozen potential,
// seeded with the occupied orbitals).
struct GroundArtifacts {
  OrbitalSet orbitals;
  RealOrbitalMatrix phi_real;
  Eigen::VectorXd energies;  // occupied first, then the extra states
  RealField density;
  MeanFieldPotential potential;
  long scf_iterations = 0;
};

GroundArtifacts solve_ground_artifacts(const Workspace& ws);

// Load from cache_path when it matches the config; otherwise solve and save.
GroundArtifacts ensure_ground(const Workspace& ws, const std::string& cache_path);

Drive drive_from_config(const RunConfig& config);
PropagationOptions propagation_options(const RunConfig& config);

// End time of a pulsed spectrum run: pulse plus post-pulse drift time.
double spectrum_t_end(const RunConfig& config);

// Pulse propagation with surface recording; optionally checkpointing every
// config.time_checkpoint_every steps (paired with a partial record file), and
// optionally resuming from such a pair.
SurfaceRecord run_surface_collection(const Workspace& ws,
                                     const GroundArtifacts& ground, double t_end,
                                     const std::string& checkpoint_path = "",
                                     bool resume = false);

// Kick propagation recording dipoles for config.linresp_t_record.
DipoleRecord run_kick_collection(const Workspace& ws, const GroundArtifacts& ground);

// Resonant weak-pulse run recording the current field for a few mode periods
// after the pulse.
CurrentMapRecord run_mode_map(const Workspace& ws, const GroundArtifacts& ground,
                              double mode_frequency, double a0, int n_cycles,
                              double extra_time, int stride);

}  // namespace tdks
