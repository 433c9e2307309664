#include "tdks/pipeline.hpp"

#include <cmath>
#include <filesystem>

#include "tdks/io.hpp"

namespace tdks {

Workspace make_workspace(RunConfig config) {
  validate_config(config);
  SpatialGrid grid = make_grid(config.grid_n_points, config.grid_dx);
  IonicLattice lattice{config.ions_count, config.ions_spacing, config.ions_softening};
  RealField ionic = ionic_potential(grid, lattice);
  HartreeSolver hartree(grid, config.ions_softening);
  return {std::move(config), std::move(grid), std::move(ionic), std::move(hartree)};
}

GroundArtifacts solve_ground_artifacts(const Workspace& ws) {
  const RunConfig& c = ws.config;
  GroundStateOptions opt;
  opt.n_orbitals = c.ground_n_orbitals;
  opt.occupancy = c.ground_occupancy;
  opt.dtau = c.ground_dtau;
  opt.mixing = c.ground_mixing;
  opt.tolerance = c.ground_tolerance;
  opt.max_iterations = c.ground_max_iterations;
  opt.init_half_width = c.ground_init_half_width;
  GroundStateResult scf = solve_ground_state(ws.grid, ws.ionic, ws.hartree, opt);

  GroundArtifacts out;
  out.phi_real = scf.orbitals.phi.real();
  out.orbitals = std::move(scf.orbitals);
  out.density = std::move(scf.density);
  out.potential = std::move(scf.potential);
  out.scf_iterations = scf.iterations;

  if (c.ground_n_extra_states > 0) {
    const int total = c.ground_n_orbitals + c.ground_n_extra_states;
    BoundStates all = relax_bound_states(ws.grid, out.potential.total, total,
                                         c.ground_dtau, 1e-9, c.ground_max_iterations,
                                         &out.phi_real);
    out.energies = all.energies;
  } else {
    out.energies = scf.energies;
  }
  return out;
}

GroundArtifacts ensure_ground(const Workspace& ws, const std::string& cache_path) {
  if (!cache_path.empty() && ground_state_matches(cache_path, ws.config)) {
    GroundStateFile file = read_ground_state(cache_path, ws.config);
    if (file.phi.rows() != ws.grid.n_points ||
        file.phi.cols() != ws.config.ground_n_orbitals)
      throw std::invalid_argument("ground state cache: orbital shape mismatch");
    GroundArtifacts out;
    out.phi_real = std::move(file.phi);
    out.orbitals.occupancy = file.occupancy;
    out.orbitals.phi = out.phi_real.cast<Complex>();
    out.energies = std::move(file.energies);
    out.density = out.orbitals.occupancy * out.phi_real.square().rowwise().sum();
    out.potential = mean_field(ws.grid, ws.hartree, ws.ionic, out.density);
    return out;
  }
  GroundArtifacts out = solve_ground_artifacts(ws);
  if (!cache_path.empty()) {
    std::filesystem::create_directories(
        std::filesystem::path(cache_path).parent_path());
    write_ground_state(cache_path, ws.config,
                       {out.orbitals.occupancy, out.phi_real, out.energies});
  }
  return out;
}

Drive drive_from_config(const RunConfig& c) {
  if (c.drive_kind == "pulse")
    return make_pulse(c.laser_a0, c.laser_frequency, c.laser_n_cycles);
  if (c.drive_kind == "kick") return make_kick(c.kick_strength);
  return {};
}

PropagationOptions propagation_options(const RunConfig& c) {
  PropagationOptions opt;
  opt.dt = c.time_dt;
  opt.frozen_potential = c.time_frozen;
  opt.use_absorber = true;
  opt.absorber = {c.absorber_width_fraction, c.absorber_strength, c.absorber_order};
  return opt;
}

double spectrum_t_end(const RunConfig& c) {
  if (c.time_t_end > 0.0) return c.time_t_end;
  return pulse_duration(c) + default_post_pulse(c);
}

SurfaceRecord run_surface_collection(const Workspace& ws,
                                     const GroundArtifacts& ground, double t_end,
                                     const std::string& checkpoint_path,
                                     bool resume) {
  const RunConfig& c = ws.config;
  Propagator prop(ws.grid, ws.ionic, ws.hartree, ground.orbitals,
                  drive_from_config(c), propagation_options(c));
  SurfaceRecorder recorder(ws.grid, surface_position(c), c.ground_n_orbitals,
                           c.tsurff_stride);
  const std::string partial_path =
      checkpoint_path.empty() ? "" : checkpoint_path + ".record";

  if (resume) {
    if (checkpoint_path.empty())
      throw std::invalid_argument("resume: no checkpoint path given");
    CheckpointData data = read_checkpoint(checkpoint_path, c);
    prop.restore(data.time, data.step_count, data.alpha, std::move(data.phi));
    recorder.seed(read_surface_record(partial_path), data.step_count + 1);
  } else {
    recorder.sample(prop);
  }

  const long n_steps = static_cast<long>(std::ceil(t_end / c.time_dt - 1e-9));
  const long every = c.time_checkpoint_every;
  while (prop.step_count() < n_steps) {
    prop.step();
    recorder.sample(prop);
    if (every > 0 && !checkpoint_path.empty() &&
        (prop.step_count() % every == 0 || prop.step_count() == n_steps)) {
      write_surface_record(partial_path, c, recorder.snapshot());
      write_checkpoint(checkpoint_path, c,
                       {prop.time(), prop.alpha(), prop.step_count(),
                        prop.orbitals().occupancy, prop.orbitals().phi});
    }
  }
  return recorder.take();
}

DipoleRecord run_kick_collection(const Workspace& ws, const GroundArtifacts& ground) {
  const RunConfig& c = ws.config;
  Propagator prop(ws.grid, ws.ionic, ws.hartree, ground.orbitals, make_kick(c.kick_strength),
                  propagation_options(c));
  DipoleRecorder recorder(c.ground_n_orbitals);
  recorder.sample(prop);
  const long n_steps =
      static_cast<long>(std::ceil(c.linresp_t_record / c.time_dt - 1e-9));
  for (long s = 0; s < n_steps; ++s) {
    prop.step();
    recorder.sample(prop);
  }
  return recorder.take();
}

CurrentMapRecord run_mode_map(const Workspace& ws, const GroundArtifacts& ground,
                              double mode_frequency, double a0, int n_cycles,
                              double extra_time, int stride) {
  const RunConfig& c = ws.config;
  // Resonant excitation at a third of the mode frequency.
  Drive drive = make_pulse(a0, mode_frequency / 3.0, n_cycles);
  Propagator prop(ws.grid, ws.ionic, ws.hartree, ground.orbitals, drive,
                  propagation_options(c));
  CurrentRecorder recorder(ws.grid.n_points, stride);
  const long pulse_steps =
      static_cast<long>(std::ceil(drive.duration() / c.time_dt - 1e-9));
  for (long s = 0; s < pulse_steps; ++s) prop.step();
  recorder.sample(prop);
  const long extra_steps = static_cast<long>(std::ceil(extra_time / c.time_dt - 1e-9));
  for (long s = 0; s < extra_steps; ++s) {
    prop.step();
    recorder.sample(prop);
  }
  return recorder.take();
}

}  // namespace tdks
