#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tdks {

// Every knob of a run, addressable as flat dotted keys in a text file or on
// the command line.  All quantities are in Hartree atomic units.
struct RunConfig {
  // grid
  int grid_n_points = 2000;
  double grid_dx = 0.5;

  // ions
  int ions_count = 40;
  double ions_spacing = 1.125;
  double ions_softening = 1.0;

  // ground state
  int ground_n_orbitals = 20;
  double ground_occupancy = 2.0;
  double ground_dtau = 0.25;
  double ground_mixing = 0.3;
  double ground_tolerance = 1e-8;
  long ground_max_iterations = 100000;
  double ground_init_half_width = 32.0;
  int ground_n_extra_states = 3;  // unoccupied levels reported alongside

  // time propagation
  double time_dt = 0.25;
  double time_t_end = 0.0;        // 0: per-command default
  double time_post_pulse = -1.0;  // <0: derived from spectrum_e_min
  bool time_frozen = false;
  long time_checkpoint_every = 0;  // steps; 0 disables periodic checkpoints

  // drive selection
  std::string drive_kind = "none";  // none | pulse | kick
  double laser_a0 = 0.004;
  double laser_frequency = 0.052;
  int laser_n_cycles = 20;
  double kick_strength = 1e-4;

  // absorber
  double absorber_width_fraction = 0.15;
  double absorber_strength = 0.05;
  int absorber_order = 4;

  // analysis surfaces & spectra
  double tsurff_surface_fraction = 0.25;  // x_R = fraction * n_points * dx
  int tsurff_stride = 1;
  double spectrum_k_min = -2.0;
  double spectrum_k_max = 2.0;
  double spectrum_dk = 1e-3;
  double spectrum_e_min = 0.01;  // slowest electron the post-pulse time waits for

  // kick response
  double linresp_t_record = 2e4;
  int linresp_pad_factor = 4;
  double linresp_align_window = 0.003;
  double linresp_align_fraction = 0.9;
  double linresp_omega_max = 0.5;

  // reference mode frequencies used for window construction
  double modes_omega_a = 0.106;
  double modes_omega_b = 0.156;

  // windowed spectra
  double gabor_sigma = 0.0;           // 0: one laser period
  double gabor_center_start = 0.0;
  double gabor_center_stop = 0.0;     // 0: record end
  double gabor_center_spacing = 0.0;  // 0: half a laser period
  double gabor_dk = 0.0;              // 0: spectrum_dk

  // intensity scans
  std::string scan_amplitudes = "0.004,0.005,0.006";
  double scan_ati_energy = 0.0;     // 0: lowest ladder line above threshold
  double scan_plasmon_energy = 0.071;
  double scan_ati_window_fraction = 0.25;     // half-width = fraction * omega_L
  double scan_plasmon_window_fraction = 0.1;  // half-width = fraction * omega_B

  // output
  std::string output_dir = "runs";
};

RunConfig default_config();

// Parse "key = value" lines (# comments, blank lines allowed) on top of base.
// Unknown keys and malformed values throw std::invalid_argument naming the key.
RunConfig parse_config_text(const std::string& text,
                            RunConfig base = default_config());
RunConfig load_config_file(const std::string& path,
                           RunConfig base = default_config());

void apply_override(RunConfig& config, const std::string& key,
                    const std::string& value);
// "key=value" form used by CLI --set flags.
void apply_override(RunConfig& config, const std::string& assignment);

// Canonical, sorted, round-trippable rendering; basis of the config hash.
std::string serialize_config(const RunConfig& config);

// FNV-1a over the canonical serialization.
std::uint64_t config_hash(const RunConfig& config);
// Same, restricted to the keys the ground state depends on (grid/ions/ground).
std::uint64_t ground_config_hash(const RunConfig& config);

// Cross-field checks; throws std::invalid_argument naming the offending key.
void validate_config(const RunConfig& config);

// Derived quantities.
double surface_position(const RunConfig& config);
double laser_period(const RunConfig& config);
double pulse_duration(const RunConfig& config);
// Time for the slowest electron of interest to reach the surfaces.
double default_post_pulse(const RunConfig& config);
std::vector<double> scan_amplitude_list(const RunConfig& config);

}  // namespace tdks
