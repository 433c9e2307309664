#pragma once

#include <vector>

#include "tdks/types.hpp"

namespace tdks {

// A local maximum of a sampled curve, refined off the grid.
struct Peak {
  double position = 0.0;
  double height = 0.0;
  double fwhm = 0.0;   // 0 when either half-height crossing is missing
  int index = 0;       // sample index of the discrete maximum
};

struct PeakOptions {
  double min_height = 0.0;          // absolute floor
  double min_rel_height = 0.0;      // relative to the global maximum
};

// All strict local maxima above the floor, highest first.  Positions are
// refined by a parabola through the three samples around the top; widths by
// linear interpolation to the half-height crossings.
std::vector<Peak> find_peaks(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                             const PeakOptions& options = {});

// Strongest peak inside [lo, hi]; height 0 signals that none was found.
Peak strongest_peak_in(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                       double lo, double hi);

// Largest sample value inside [lo, hi] (no peak shape required).
double max_in_window(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, double lo,
                     double hi);

// Photon-order ladder on top of a bound level: energies eps + n*omega that
// land above the continuum edge, up to e_max.
struct LadderLine {
  int order = 0;
  double energy = 0.0;
};

std::vector<LadderLine> photon_ladder(double eps, double omega, double e_max);

// Trapezoid integral of the piecewise-linear curve over [lo, hi], with the
// endpoints interpolated so the window edges are honored exactly.
double window_yield(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, double lo,
                    double hi);

// Least-squares slope of log(y) against log(x); the scaling exponent.
double log_log_slope(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y);

// Slope plus the root-mean-square log-space residual of the fit.
struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

SlopeFit log_log_fit(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y);

}  // namespace tdks
