#include "tdks/groundstate.hpp"

#include "tdks/hamiltonian.hpp"

namespace tdks {

namespace {

// Particle-in-a-box modes on [-half_width, half_width], zero outside; the
// usual cheap basis whose members overlap every low state.
RealOrbitalMatrix sine_modes(const SpatialGrid& grid, int n_modes, double half_width) {
  if (2.0 * half_width > grid.length())
    throw std::invalid_argument("init: sine-mode support exceeds the box");
  RealOrbitalMatrix phi = RealOrbitalMatrix::Zero(grid.n_points, n_modes);
  for (int i = 0; i < n_modes; ++i)
    for (int j = 0; j < grid.n_points; ++j) {
      double x = grid.x[j];
      if (std::abs(x) < half_width)
        phi(j, i) = std::sin((i + 1) * M_PI * (x + half_width) / (2.0 * half_width));
    }
  return phi;
}

double max_drift(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

GroundStateResult solve_ground_state(const SpatialGrid& grid, const RealField& ionic,
                                     const HartreeSolver& hartree,
                                     const GroundStateOptions& opt) {
  if (opt.n_orbitals < 1) throw std::invalid_argument("ground state: n_orbitals must be >= 1");
  if (!(opt.dtau > 0.0)) throw std::invalid_argument("ground state: dtau must be positive");
  if (opt.mixing <= 0.0 || opt.mixing > 1.0)
    throw std::invalid_argument("ground state: mixing must lie in (0, 1]");

  RealOrbitalMatrix phi = sine_modes(grid, opt.n_orbitals, opt.init_half_width);
  orthonormalize(grid, phi);
  RealField n = opt.occupancy * phi.square().rowwise().sum();
  MeanFieldPotential v = mean_field(grid, hartree, ionic, n);
  Eigen::VectorXd energies =
      orbital_energies(grid, field_free_hamiltonian(grid, v.total), phi);

  long iter = 0;
  for (; iter < opt.max_iterations; ++iter) {
    auto h = field_free_hamiltonian(grid, v.total);
    crank_nicolson_step(h, opt.dtau, phi);
    orthonormalize(grid, phi);
    RealField n_new = opt.occupancy * phi.square().rowwise().sum();
    n = (1.0 - opt.mixing) * n + opt.mixing * n_new;
    v = mean_field(grid, hartree, ionic, n);
    Eigen::VectorXd e = orbital_energies(grid, field_free_hamiltonian(grid, v.total), phi);
    double drift = max_drift(e, energies);
    energies = e;
    if (!energies.allFinite())
      throw NumericFailure("ground state: non-finite orbital energy");
    if (drift < opt.tolerance) break;
  }
  if (iter == opt.max_iterations)
    throw ConvergenceFailure("ground state: no self-consistency within iteration budget");

  GroundStateResult out;
  out.orbitals.occupancy = opt.occupancy;
  out.orbitals.phi = phi.cast<Complex>();
  out.density = opt.occupancy * phi.square().rowwise().sum();
  out.potential = mean_field(grid, hartree, ionic, out.density);
  out.energies = orbital_energies(grid, field_free_hamiltonian(grid, out.potential.total), phi);
  out.iterations = iter + 1;
  return out;
}

BoundStates relax_bound_states(const SpatialGrid& grid, const RealField& v,
                               int n_states, double dtau, double tolerance,
                               long max_iterations, const RealOrbitalMatrix* seed) {
  if (n_states < 1) throw std::invalid_argument("bound states: n_states must be >= 1");
  const double half_width = std::min(48.0, 0.45 * grid.length());
  RealOrbitalMatrix phi = sine_modes(grid, n_states, half_width);
  if (seed) {
    if (seed->rows() != grid.n_points || seed->cols() > n_states)
      throw std::invalid_argument("bound states: seed shape mismatch");
    phi.leftCols(seed->cols()) = *seed;
  }
  orthonormalize(grid, phi);

  const auto h = field_free_hamiltonian(grid, v);
  Eigen::VectorXd energies = orbital_energies(grid, h, phi);
  long iter = 0;
  for (; iter < max_iterations; ++iter) {
    crank_nicolson_step(h, dtau, phi);
    orthonormalize(grid, phi);
    Eigen::VectorXd e = orbital_energies(grid, h, phi);
    double drift = max_drift(e, energies);
    energies = e;
    if (drift < tolerance) break;
  }
  if (iter == max_iterations)
    throw ConvergenceFailure("bound states: relaxation did not settle");
  // The Crank-Nicolson gain |1 - dtau E/2| / |1 + dtau E/2| tends back to 1
  // at the top of the kinetic band, so too large a dtau lets grid-scale modes
  // out-compete the wanted states when every wanted energy is positive
  // (stability needs dtau^2 E_i E_max < 4).  Refuse to hand such junk back.
  for (int i = 0; i < n_states; ++i) {
    double pot = grid.dx * (v * phi.col(i).square()).sum();
    if (energies[i] - pot > 1.0 / (grid.dx * grid.dx))
      throw NumericFailure("bound states: relaxation captured grid-scale modes; reduce dtau");
  }
  return {std::move(phi), std::move(energies), iter + 1};
}

BoundStates diagonalize_bound_states(const SpatialGrid& grid, const RealField& v,
                                     int n_states) {
  if (n_states < 1 || n_states > grid.n_points)
    throw std::invalid_argument("bound states: n_states out of range");
  auto h = field_free_hamiltonian(grid, v);
  Eigen::VectorXd diag = h.diag.matrix();
  Eigen::VectorXd sub = Eigen::VectorXd::Constant(grid.n_points - 1, h.lower);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw NumericFailure("bound states: tridiagonal eigensolve failed");

  BoundStates out;
  out.energies = solver.eigenvalues().head(n_states);
  out.states.resize(grid.n_points, n_states);
  const double scale = 1.0 / std::sqrt(grid.dx);
  for (int i = 0; i < n_states; ++i) {
    Eigen::VectorXd col = solver.eigenvectors().col(i) * scale;
    // Fix the arbitrary overall sign for reproducibility.
    int peak = 0;
    col.cwiseAbs().maxCoeff(&peak);
    if (col[peak] < 0.0) col = -col;
    out.states.col(i) = col.array();
  }
  out.iterations = 1;
  return out;
}

}  // namespace tdks
