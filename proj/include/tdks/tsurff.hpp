#pragma once

#include <vector>

#include "tdks/dynamics.hpp"
#include "tdks/grid.hpp"
#include "tdks/types.hpp"

namespace tdks {

// Time series of orbital values and derivatives on a symmetric pair of
// analysis surfaces, plus everything needed to attach Volkov phases later.
struct SurfaceRecord {
  double x_surface = 0.0;  // right surface; the left one sits at -x_surface
  double dt = 0.0;         // spacing of the recorded samples
  int n_orbitals = 0;

  Eigen::ArrayXd t;
  Eigen::ArrayXd a;      // vector potential at the sample times
  Eigen::ArrayXd alpha;  // its running time integral
  Eigen::ArrayXXcd phi_r, dphi_r;  // [n_samples x n_orbitals]
  Eigen::ArrayXXcd phi_l, dphi_l;

  int n_samples() const { return static_cast<int>(t.size()); }
};

// Accumulates a SurfaceRecord while a Propagator runs.  Call sample() once
// before the first step and then after every step.
class SurfaceRecorder {
 public:
  SurfaceRecorder(const SpatialGrid& grid, double x_surface, int n_orbitals,
                  int stride = 1);

  void sample(const Propagator& prop);
  SurfaceRecord take();

  // Copy of everything recorded so far (take() without finishing).
  SurfaceRecord snapshot() const;
  // Resume an interrupted recording: reload its output and the number of
  // sample() calls that produced it.
  void seed(const SurfaceRecord& record, long calls);

 private:
  double x_surface_;
  int j_right_, j_left_;
  int n_orbitals_;
  int stride_;
  long calls_ = 0;
  std::vector<double> t_, a_, alpha_;
  std::vector<Complex> phi_r_, dphi_r_, phi_l_, dphi_l_;  // sample-major
};

struct MomentumGrid {
  double k_min = -2.0;
  double k_max = 2.0;
  double dk = 1e-3;

  Eigen::ArrayXd values() const;
};

// Weight applied to the surface time series before accumulation: either the
// whole record or a Gaussian centered on one arrival time.
struct TimeWindow {
  bool gaussian = false;
  double center = 0.0;
  double sigma = 0.0;
  double truncation = 6.0;  // ignore samples further than this many sigma out

  static TimeWindow full() { return {}; }
  static TimeWindow gauss(double center, double sigma, double truncation = 6.0) {
    return {true, center, sigma, truncation};
  }
};

// Per-orbital ionization amplitude b_i(k), both surfaces combined; the
// momentum-space wavefunction of the freed part of orbital i.
Eigen::ArrayXXcd ionization_amplitudes(const SurfaceRecord& rec,
                                       const Eigen::ArrayXd& k,
                                       const TimeWindow& window);

// Momentum-resolved yield: sum of |b_i(k)|^2 over orbitals.
Eigen::ArrayXd photoelectron_spectrum(const SurfaceRecord& rec,
                                      const Eigen::ArrayXd& k,
                                      const TimeWindow& window);

// One spectrum per window center; row g is the spectrum seen through a
// Gaussian window at centers[g].
Eigen::ArrayXXd gabor_map(const SurfaceRecord& rec, const Eigen::ArrayXd& k,
                          const Eigen::ArrayXd& centers, double sigma);

// Fold a symmetric-in-k spectrum onto the energy axis: E = k^2/2, yields for
// +k and -k added.
struct EnergySpectrum {
  Eigen::ArrayXd energy;
  Eigen::ArrayXd yield;
};

EnergySpectrum energy_spectrum(const Eigen::ArrayXd& k, const Eigen::ArrayXd& y);

}  // namespace tdks
