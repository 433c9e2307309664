#include "tdks/potentials.hpp"

#include "tdks/fft.hpp"

namespace tdks {

RealField lattice_positions(const IonicLattice& lattice) {
  RealField pos(lattice.n_ions);
  for (int i = 0; i < lattice.n_ions; ++i)
    pos[i] = (-(lattice.n_ions + 1) * 0.5 + (i + 1)) * lattice.spacing;
  return pos;
}

RealField ionic_potential(const SpatialGrid& grid, const IonicLattice& lattice) {
  if (lattice.n_ions < 1) throw std::invalid_argument("lattice: n_ions must be >= 1");
  if (!(lattice.spacing > 0.0)) throw std::invalid_argument("lattice: spacing must be positive");
  if (!(lattice.softening > 0.0)) throw std::invalid_argument("lattice: softening must be positive");
  RealField pos = lattice_positions(lattice);
  RealField v = RealField::Zero(grid.n_points);
  for (int i = 0; i < lattice.n_ions; ++i)
    for (int j = 0; j < grid.n_points; ++j)
      v[j] -= soft_core(grid.x[j] - pos[i], lattice.softening);
  return v;
}

HartreeSolver::HartreeSolver(const SpatialGrid& grid, double softening) {
  if (!(softening > 0.0)) throw std::invalid_argument("hartree: softening must be positive");
  n_ = grid.n_points;
  dx_ = grid.dx;
  // Linear (not circular) convolution: pad to at least 2n-1.
  n_pad_ = next_pow2(2 * n_);
  Eigen::VectorXd kernel = Eigen::VectorXd::Zero(n_pad_);
  // Kernel samples at lags -(n-1)..(n-1), wrapped so lag 0 sits at index 0.
  for (int lag = -(n_ - 1); lag <= n_ - 1; ++lag) {
    int idx = lag >= 0 ? lag : n_pad_ + lag;
    kernel[idx] = soft_core(lag * dx_, softening);
  }
  kernel_fft_ = fft_forward_real(kernel);
}

RealField HartreeSolver::operator()(const RealField& density) const {
  if (static_cast<int>(density.size()) != n_)
    throw std::invalid_argument("hartree: density size mismatch");
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(n_pad_);
  padded.head(n_) = density.matrix();
  Eigen::VectorXcd prod = fft_forward_real(padded).cwiseProduct(kernel_fft_);
  Eigen::VectorXcd conv = fft_inverse(prod);
  return dx_ * conv.head(n_).real().array();
}

RealField hartree_direct(const SpatialGrid& grid, const RealField& density,
                         double softening) {
  const int n = grid.n_points;
  RealField v = RealField::Zero(n);
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k)
      acc += density[k] * soft_core(grid.x[j] - grid.x[k], softening);
    v[j] = grid.dx * acc;
  }
  return v;
}

RealField exchange_potential(const RealField& density) {
  if ((density < -1e-14).any())
    throw std::domain_error("exchange: negative density");
  return -(3.0 * density.max(0.0) / M_PI).pow(1.0 / 3.0);
}

MeanFieldPotential mean_field(const SpatialGrid& grid, const HartreeSolver& solver,
                              const RealField& ionic, const RealField& density) {
  (void)grid;
  MeanFieldPotential v;
  v.hartree = solver(density);
  v.exchange = exchange_potential(density);
  v.total = ionic + v.hartree + v.exchange;
  return v;
}

}  // namespace tdks
