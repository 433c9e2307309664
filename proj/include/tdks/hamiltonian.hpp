#pragma once

#include "tdks/grid.hpp"
#include "tdks/types.hpp"

namespace tdks {

// Tridiagonal operator with constant off-diagonal entries, which is all the
// three-point stencil ever produces on a uniform grid.
template <class Scalar>
struct Tridiagonal {
  using Field = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  Field diag;
  Scalar lower{};  // coefficient of f[j-1]
  Scalar upper{};  // coefficient of f[j+1]

  int size() const { return static_cast<int>(diag.size()); }

  Field apply(const Field& f) const {
    const int n = size();
    Field out = diag * f;
    out.tail(n - 1) += lower * f.head(n - 1);
    out.head(n - 1) += upper * f.tail(n - 1);
    return out;
  }
};

// Thomas elimination with the off-diagonals folded in once, so one
// factorization serves every orbital in a stack.  No pivoting: the
// Crank-Nicolson left-hand sides built below are diagonally dominant for any
// sane step size.
template <class Scalar>
class TridiagonalFactorization {
 public:
  using Field = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  explicit TridiagonalFactorization(const Tridiagonal<Scalar>& m)
      : upper_(m.upper) {
    const int n = m.size();
    inv_pivot_.resize(n);
    lower_ratio_.resize(n);
    Scalar pivot = m.diag[0];
    inv_pivot_[0] = Scalar(1) / pivot;
    lower_ratio_[0] = Scalar(0);
    for (int j = 1; j < n; ++j) {
      lower_ratio_[j] = m.lower * inv_pivot_[j - 1];
      pivot = m.diag[j] - lower_ratio_[j] * m.upper;
      inv_pivot_[j] = Scalar(1) / pivot;
    }
  }

  void solve_in_place(Field& b) const {
    const int n = static_cast<int>(b.size());
    for (int j = 1; j < n; ++j) b[j] -= lower_ratio_[j] * b[j - 1];
    b[n - 1] *= inv_pivot_[n - 1];
    for (int j = n - 2; j >= 0; --j) b[j] = (b[j] - upper_ * b[j + 1]) * inv_pivot_[j];
  }

 private:
  Field inv_pivot_;
  Field lower_ratio_;
  Scalar upper_;
};

// H = -1/2 d^2/dx^2 + V with hard-wall boundaries.
inline Tridiagonal<double> field_free_hamiltonian(const SpatialGrid& grid,
                                                  const RealField& v) {
  Tridiagonal<double> h;
  h.diag = 1.0 / (grid.dx * grid.dx) + v;
  h.lower = h.upper = -0.5 / (grid.dx * grid.dx);
  return h;
}

// Velocity-gauge H = -1/2 d^2/dx^2 - i A d/dx + V.  The spatially uniform
// A^2/2 piece is not part of the stencil; being a multiple of the identity
// it is applied separately as an exact global phase per step.
inline Tridiagonal<Complex> velocity_gauge_hamiltonian(const SpatialGrid& grid,
                                                       const RealField& v,
                                                       double vector_potential) {
  Tridiagonal<Complex> h;
  h.diag = (1.0 / (grid.dx * grid.dx) + v).cast<Complex>();
  const double kin = -0.5 / (grid.dx * grid.dx);
  const double drift = vector_potential / (2.0 * grid.dx);
  h.lower = Complex(kin, drift);
  h.upper = Complex(kin, -drift);
  return h;
}

// (1 + (z/2) H) for the implicit half of a Crank-Nicolson step; z = i*dt in
// real time, z = dtau in imaginary time.
template <class Scalar, class StepScalar>
auto crank_nicolson_lhs(const Tridiagonal<Scalar>& h, StepScalar z) {
  using Out = decltype(Scalar{} * z);
  Tridiagonal<Out> m;
  m.diag = Out(1) + (z / StepScalar(2)) * h.diag.template cast<Out>();
  m.lower = (z / StepScalar(2)) * Out(h.lower);
  m.upper = (z / StepScalar(2)) * Out(h.upper);
  return m;
}

// One Crank-Nicolson step of every column of phi under a fixed Hamiltonian.
// The factorization of the implicit half is built once and reused.
template <class Scalar, class StepScalar, class Orbitals>
void crank_nicolson_step(const Tridiagonal<Scalar>& h, StepScalar z,
                         Orbitals& phi) {
  static_assert(std::is_same_v<decltype(Scalar{} * z), Scalar>,
                "step scalar must not widen the Hamiltonian scalar");
  using Field = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
  const auto lhs = crank_nicolson_lhs(h, z);
  const TridiagonalFactorization<Scalar> factor(lhs);
  const StepScalar half = z / StepScalar(2);
  for (int i = 0; i < phi.cols(); ++i) {
    Field col = phi.col(i);
    Field b = col - half * h.apply(col);
    factor.solve_in_place(b);
    phi.col(i) = b;
  }
}

// Rayleigh quotients <phi_i|H|phi_i> for normalized columns.
template <class Scalar>
Eigen::VectorXd orbital_energies(
    const SpatialGrid& grid, const Tridiagonal<Scalar>& h,
    const Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>& phi) {
  Eigen::VectorXd e(phi.cols());
  for (int i = 0; i < phi.cols(); ++i) {
    Eigen::Array<Scalar, Eigen::Dynamic, 1> col = phi.col(i);
    auto val = (col.conjugate() * h.apply(col)).sum() * grid.dx;
    if constexpr (std::is_same_v<Scalar, double>)
      e[i] = val;
    else
      e[i] = std::real(val);
  }
  return e;
}

}  // namespace tdks
