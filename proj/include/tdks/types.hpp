#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

// Common scalar and field aliases. Everything is in Hartree atomic units.

namespace tdks {

using Real = double;
using Complex = std::complex<double>;

// Samples of a function on the spatial grid.
using RealField = Eigen::ArrayXd;
using ComplexField = Eigen::ArrayXcd;

// One column per orbital, one row per grid node.
using OrbitalMatrix = Eigen::ArrayXXcd;
using RealOrbitalMatrix = Eigen::ArrayXXd;

inline constexpr Complex I{0.0, 1.0};

// Thrown when the state stops being representable (NaN/Inf in the density).
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by iterative solvers that exhaust their budget.
struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tdks
