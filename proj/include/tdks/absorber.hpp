#pragma once

#include "tdks/grid.hpp"
#include "tdks/types.hpp"

namespace tdks {

// Polynomial absorbing potential filling the outer fraction of each box edge.
// Applied multiplicatively as exp(-W dt) once per time step.
struct AbsorberSpec {
  double width_fraction = 0.15;  // of the full box length, per side
  double strength = 0.05;
  int order = 4;
};

inline double absorber_start(const SpatialGrid& grid, const AbsorberSpec& spec) {
  return 0.5 * grid.length() * (1.0 - 2.0 * spec.width_fraction);
}

inline RealField absorber_profile(const SpatialGrid& grid, const AbsorberSpec& spec) {
  if (!(spec.width_fraction > 0.0) || spec.width_fraction >= 0.5)
    throw std::invalid_argument("absorber: width_fraction must lie in (0, 0.5)");
  if (spec.strength < 0.0) throw std::invalid_argument("absorber: negative strength");
  if (spec.order < 1) throw std::invalid_argument("absorber: order must be >= 1");
  const double x0 = absorber_start(grid, spec);
  const double ramp = 0.5 * grid.length() - x0;
  RealField w(grid.n_points);
  for (int j = 0; j < grid.n_points; ++j) {
    double d = std::abs(grid.x[j]) - x0;
    w[j] = d > 0.0 ? spec.strength * std::pow(d / ramp, spec.order) : 0.0;
  }
  return w;
}

inline RealField absorber_mask(const SpatialGrid& grid, const AbsorberSpec& spec,
                               double dt) {
  return (-dt * absorber_profile(grid, spec)).exp();
}

}  // namespace tdks
