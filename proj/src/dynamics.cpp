#include "tdks/dynamics.hpp"

#include "tdks/hamiltonian.hpp"

namespace tdks {

Propagator::Propagator(const SpatialGrid& grid, RealField ionic,
                       const HartreeSolver& hartree, OrbitalSet initial,
                       Drive drive, PropagationOptions options)
    : grid_(grid),
      ionic_(std::move(ionic)),
      hartree_(hartree),
      orbitals_(std::move(initial)),
      drive_(drive),
      options_(options) {
  if (!(options_.dt > 0.0)) throw std::invalid_argument("propagate: dt must be positive");
  drive_.validate();
  mask_ = options_.use_absorber ? absorber_mask(grid_, options_.absorber, options_.dt)
                                : RealField::Ones(grid_.n_points);
  density_ = tdks::density(orbitals_);
  potential_ = mean_field(grid_, hartree_, ionic_, density_);
}

void Propagator::refresh_fields() {
  density_ = tdks::density(orbitals_);
  if (!density_.allFinite())
    throw NumericFailure("propagate: non-finite density at t = " + std::to_string(time_));
  if (!options_.frozen_potential)
    potential_ = mean_field(grid_, hartree_, ionic_, density_);
}

void Propagator::step() {
  const double dt = options_.dt;
  const double a_mid = drive_.vector_potential(time_ + 0.5 * dt);
  const Complex z = I * dt;

  if (options_.frozen_potential) {
    auto h = velocity_gauge_hamiltonian(grid_, potential_.total, a_mid);
    crank_nicolson_step(h, z, orbitals_.phi);
  } else {
    // Predictor under V[n(t)].
    OrbitalMatrix trial = orbitals_.phi;
    auto h_pred = velocity_gauge_hamiltonian(grid_, potential_.total, a_mid);
    crank_nicolson_step(h_pred, z, trial);
    OrbitalSet trial_set{std::move(trial), orbitals_.occupancy};
    RealField n_half = 0.5 * (density_ + tdks::density(trial_set));
    // Corrector: redo the whole step from t under the midpoint field.
    auto v_half = mean_field(grid_, hartree_, ionic_, n_half);
    auto h_corr = velocity_gauge_hamiltonian(grid_, v_half.total, a_mid);
    crank_nicolson_step(h_corr, z, orbitals_.phi);
  }

  // The spatially uniform A^2/2 piece commutes with everything; apply it as
  // a global phase instead of widening the tridiagonal stencil.
  const Complex phase = std::exp(-I * (0.5 * a_mid * a_mid * dt));
  orbitals_.phi *= phase;

  if (options_.use_absorber)
    for (int i = 0; i < orbitals_.n_orbitals(); ++i) orbitals_.phi.col(i) *= mask_;

  alpha_ += 0.5 * dt *
            (drive_.vector_potential(time_) + drive_.vector_potential(time_ + dt));
  time_ += dt;
  ++step_count_;
  refresh_fields();
}

void Propagator::advance(long n_steps) {
  for (long i = 0; i < n_steps; ++i) step();
}

void Propagator::restore(double time, long step_count, double alpha,
                         OrbitalMatrix phi) {
  if (phi.rows() != grid_.n_points || phi.cols() != orbitals_.phi.cols())
    throw std::invalid_argument("restore: orbital stack shape mismatch");
  time_ = time;
  step_count_ = step_count;
  alpha_ = alpha;
  orbitals_.phi = std::move(phi);
  // In frozen mode refresh_fields leaves the potential at its construction
  // value, which is the t=0 field a restart must keep.
  refresh_fields();
}

}  // namespace tdks
