#pragma once

#include <vector>

#include "tdks/dynamics.hpp"
#include "tdks/types.hpp"

namespace tdks {

// Dipole time series, total and per orbital, as driven by a weak kick.
struct DipoleRecord {
  double dt = 0.0;
  Eigen::ArrayXd t;
  Eigen::ArrayXd total;
  Eigen::ArrayXXd orbital;  // [n_samples x n_orbitals]

  int n_samples() const { return static_cast<int>(t.size()); }
  int n_orbitals() const { return static_cast<int>(orbital.cols()); }
};

class DipoleRecorder {
 public:
  explicit DipoleRecorder(int n_orbitals, int stride = 1);

  void sample(const Propagator& prop);
  DipoleRecord take();

 private:
  int n_orbitals_;
  int stride_;
  long calls_ = 0;
  std::vector<double> t_, total_;
  std::vector<double> orbital_;  // sample-major
};

struct PowerSpectrum {
  Eigen::ArrayXd omega;
  Eigen::ArrayXd power;
};

// Emitted-power style spectrum of a dipole signal: subtract the mean,
// Hann-taper, zero-pad, transform, weight by omega^4 (the squared modulus of
// the acceleration prefactor).
PowerSpectrum dipole_power_spectrum(const Eigen::ArrayXd& signal, double dt,
                                    int pad_factor = 4);

std::vector<PowerSpectrum> orbital_power_spectra(const DipoleRecord& rec,
                                                 int pad_factor = 4);

// Resonances of the total spectrum, each labeled collective when the
// orbital-resolved spectra peak at the same place: that is what separates a
// plasmon from a single-particle transition.
struct Mode {
  double omega = 0.0;
  double height = 0.0;
  double fwhm = 0.0;
  double aligned_fraction = 0.0;
  bool collective = false;
};

struct ModeCatalogOptions {
  double omega_min = 0.0;
  double omega_max = 0.0;          // 0 means the full axis
  double min_rel_height = 1e-3;    // prominence floor, relative to the band maximum;
                                   // sits above the first Hann sidelobe (7e-4)
  double median_floor_factor = 10.0;  // and at least this multiple of the median
  double align_window = 0.003;
  double align_fraction = 0.9;
};

std::vector<Mode> classify_modes(const PowerSpectrum& total,
                                 const std::vector<PowerSpectrum>& per_orbital,
                                 const ModeCatalogOptions& options = {});

// Snapshots of the physical current density, for looking at the spatial
// structure of a mode after resonant driving.
struct CurrentMapRecord {
  double dt = 0.0;
  Eigen::ArrayXd t;
  Eigen::ArrayXXd j;  // [n_samples x n_points]
};

class CurrentRecorder {
 public:
  explicit CurrentRecorder(int n_points, int stride = 1);

  void sample(const Propagator& prop);
  CurrentMapRecord take();

 private:
  int n_points_;
  int stride_;
  long calls_ = 0;
  std::vector<double> t_;
  std::vector<double> j_;  // sample-major
};

}  // namespace tdks
