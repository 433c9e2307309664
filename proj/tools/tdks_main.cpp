#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tdks/analysis.hpp"
#include "tdks/io.hpp"
#include "tdks/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace tdks;

namespace {

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> sets;
  std::string out_dir;
  std::string ground_path;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("-c,--config", a.config_path, "configuration file (key = value lines)")
      ->check(CLI::ExistingFile);
  cmd->add_option("-s,--set", a.sets, "override a key, e.g. --set time.dt=0.2");
  cmd->add_option("-o,--out", a.out_dir, "output directory (overrides output.dir)");
  cmd->add_option("--ground", a.ground_path, "ground-state cache file");
}

RunConfig build_config(const CommonArgs& a) {
  RunConfig c = a.config_path.empty() ? default_config() : load_config_file(a.config_path);
  for (const std::string& s : a.sets) apply_override(c, s);
  if (!a.out_dir.empty()) c.output_dir = a.out_dir;
  validate_config(c);
  return c;
}

fs::path output_root(const RunConfig& c) {
  fs::path dir = c.output_dir;
  if (dir.is_relative())
    if (const char* root = std::getenv("TDKS_OUTPUT_ROOT"); root && *root)
      dir = fs::path(root) / dir;
  return dir;
}

fs::path command_dir(const RunConfig& c, const char* name) {
  fs::path dir = output_root(c) / name;
  fs::create_directories(dir);
  return dir;
}

std::string ground_cache_path(const CommonArgs& a, const RunConfig& c) {
  if (!a.ground_path.empty()) return a.ground_path;
  fs::create_directories(output_root(c));
  return (output_root(c) / "ground_state.bin").string();
}

std::string orbital_label(const char* prefix, int index_1based) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%02d", prefix, index_1based);
  return buf;
}

void write_json(const fs::path& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << j.dump(2) << '\n';
}

std::string hash_string(const RunConfig& c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(config_hash(c)));
  return buf;
}

// The three highest initially occupied orbitals, reported alongside the total.
std::vector<int> reported_orbitals(const RunConfig& c) {
  std::vector<int> idx;
  for (int i = std::max(0, c.ground_n_orbitals - 3); i < c.ground_n_orbitals; ++i)
    idx.push_back(i);
  return idx;
}

// ---------------------------------------------------------------------------
// ground

void cmd_ground(const CommonArgs& args) {
  RunConfig c = build_config(args);
  Workspace ws = make_workspace(std::move(c));
  std::fprintf(stderr, "ground: solving self-consistent field...\n");
  GroundArtifacts g = ensure_ground(ws, ground_cache_path(args, ws.config));
  const fs::path dir = command_dir(ws.config, "ground");

  const int n_occ = ws.config.ground_n_orbitals;
  const int n_all = static_cast<int>(g.energies.size());
  Eigen::ArrayXd index(n_all), occupation(n_all);
  for (int i = 0; i < n_all; ++i) {
    index[i] = i + 1;
    occupation[i] = i < n_occ ? g.orbitals.occupancy : 0.0;
  }
  write_csv((dir / "levels.csv").string(), ws.config,
            {{"index[1]", index},
             {"energy[au]", g.energies.array()},
             {"occupation[1]", occupation}},
            {"scf_iterations = " + std::to_string(g.scf_iterations)});

  const RealField v_x = exchange_potential(g.density);
  std::vector<CsvColumn> profile{{"x[au]", ws.grid.x},
                                 {"v_ion[au]", ws.ionic},
                                 {"v_hartree[au]", g.potential.hartree},
                                 {"v_exchange[au]", v_x},
                                 {"v_ks[au]", g.potential.total},
                                 {"density[au]", g.density}};
  for (int i = 0; i < n_occ; ++i)
    profile.push_back({orbital_label("phi2_", i + 1) + "[au]",
                       g.phi_real.col(i).square()});
  write_csv((dir / "ground_profile.csv").string(), ws.config, profile);

  std::printf("ground state: %ld SCF iterations\n", g.scf_iterations);
  std::printf("  highest occupied   e_%d = %.6f\n", n_occ, g.energies[n_occ - 1]);
  if (n_all > n_occ)
    std::printf("  lowest unoccupied  e_%d = %.6f\n", n_occ + 1, g.energies[n_occ]);
  std::printf("  wrote %s\n", (dir / "levels.csv").c_str());
  std::printf("  wrote %s\n", (dir / "ground_profile.csv").c_str());
}

// ---------------------------------------------------------------------------
// kick

void cmd_kick(const CommonArgs& args) {
  RunConfig c = build_config(args);
  Workspace ws = make_workspace(std::move(c));
  GroundArtifacts g = ensure_ground(ws, ground_cache_path(args, ws.config));
  const fs::path dir = command_dir(ws.config, "kick");
  const RunConfig& cfg = ws.config;

  const long n_steps = static_cast<long>(std::ceil(cfg.linresp_t_record / cfg.time_dt));
  std::fprintf(stderr, "kick: propagating %ld steps (%s potential)...\n", n_steps,
               cfg.time_frozen ? "frozen" : "self-consistent");
  DipoleRecord rec = run_kick_collection(ws, g);

  std::vector<CsvColumn> dip{{"t[au]", rec.t}, {"d_total[au]", rec.total}};
  for (int i = 0; i < rec.n_orbitals(); ++i)
    dip.push_back({orbital_label("d_", i + 1) + "[au]", rec.orbital.col(i)});
  write_csv((dir / "dipole.csv").string(), cfg, dip);

  PowerSpectrum total = dipole_power_spectrum(rec.total, rec.dt, cfg.linresp_pad_factor);
  std::vector<PowerSpectrum> per_orbital = orbital_power_spectra(rec, cfg.linresp_pad_factor);

  // Band-limit the CSV to the physically interesting range.
  int n_keep = 0;
  while (n_keep < total.omega.size() && total.omega[n_keep] <= cfg.linresp_omega_max)
    ++n_keep;
  std::vector<CsvColumn> pow{{"omega[au]", total.omega.head(n_keep)},
                             {"p_total[au]", total.power.head(n_keep)}};
  for (int i = 0; i < rec.n_orbitals(); ++i)
    pow.push_back({orbital_label("p_", i + 1) + "[au]",
                   per_orbital[i].power.head(n_keep)});
  write_csv((dir / "power_spectrum.csv").string(), cfg, pow);

  ModeCatalogOptions opt;
  opt.omega_min = 0.01;  // clear of the detrended-DC foot
  opt.omega_max = cfg.linresp_omega_max;
  opt.align_window = cfg.linresp_align_window;
  opt.align_fraction = cfg.linresp_align_fraction;
  std::vector<Mode> modes = classify_modes(total, per_orbital, opt);

  ordered_json j;
  j["config_hash"] = hash_string(cfg);
  j["frozen"] = cfg.time_frozen;
  j["kick_strength"] = cfg.kick_strength;
  j["t_record"] = cfg.linresp_t_record;
  j["resolution"] = 2.0 * M_PI / cfg.linresp_t_record;
  j["band"] = {{"omega_min", opt.omega_min}, {"omega_max", opt.omega_max}};
  j["modes"] = ordered_json::array();
  for (const Mode& m : modes)
    j["modes"].push_back({{"omega", m.omega},
                          {"height", m.height},
                          {"fwhm", m.fwhm},
                          {"aligned_fraction", m.aligned_fraction},
                          {"collective", m.collective}});
  write_json(dir / "modes.json", j);

  std::printf("kick response (%s):\n", cfg.time_frozen ? "frozen" : "self-consistent");
  for (const Mode& m : modes)
    std::printf("  omega = %.4f  height = %.3e  %s\n", m.omega, m.height,
                m.collective ? "collective" : "single-particle");
  std::printf("  wrote %s\n", (dir / "power_spectrum.csv").c_str());
  std::printf("  wrote %s\n", (dir / "modes.json").c_str());
}

// ---------------------------------------------------------------------------
// spectrum

void spectrum_tables(const RunConfig& cfg, const SurfaceRecord& rec,
                     const fs::path& dir,
                     const std::vector<std::string>& comments) {
  const Eigen::ArrayXd k = MomentumGrid{cfg.spectrum_k_min, cfg.spectrum_k_max,
                                        cfg.spectrum_dk}.values();
  const Eigen::ArrayXXcd amps = ionization_amplitudes(rec, k, TimeWindow::full());
  const Eigen::ArrayXd y_total = amps.abs2().rowwise().sum();

  std::vector<CsvColumn> ks{{"k[au]", k}, {"y_total[au]", y_total}};
  for (int i : reported_orbitals(cfg))
    ks.push_back({orbital_label("y_orb", i + 1) + "[au]", amps.col(i).abs2()});
  write_csv((dir / "spectrum_k.csv").string(), cfg, ks, comments);

  const EnergySpectrum folded = energy_spectrum(k, y_total);
  std::vector<CsvColumn> es{{"energy[au]", folded.energy},
                            {"y_total[au]", folded.yield}};
  for (int i : reported_orbitals(cfg))
    es.push_back({orbital_label("y_orb", i + 1) + "[au]",
                  energy_spectrum(k, amps.col(i).abs2()).yield});
  write_csv((dir / "spectrum_e.csv").string(), cfg, es, comments);
}

void cmd_spectrum(const CommonArgs& args, bool resume) {
  RunConfig c = build_config(args);
  if (c.drive_kind == "none") c.drive_kind = "pulse";
  if (c.drive_kind != "pulse")
    throw std::invalid_argument("drive.kind: spectrum needs a pulse drive");
  Workspace ws = make_workspace(std::move(c));
  const RunConfig& cfg = ws.config;
  GroundArtifacts g = ensure_ground(ws, ground_cache_path(args, cfg));
  const fs::path dir = command_dir(cfg, "spectrum");

  const double t_end = spectrum_t_end(cfg);
  const double t_pulse = pulse_duration(cfg);
  const std::string ckpt = (cfg.time_checkpoint_every > 0 || resume)
                               ? (dir / "checkpoint.bin").string()
                               : std::string();
  std::fprintf(stderr,
               "spectrum: pulse %.0f au + drift to t = %.0f au (%ld steps)%s...\n",
               t_pulse, t_end, static_cast<long>(std::ceil(t_end / cfg.time_dt)),
               resume ? ", resuming" : "");
  SurfaceRecord rec = run_surface_collection(ws, g, t_end, ckpt, resume);
  write_surface_record((dir / "surface_record.bin").string(), cfg, rec);

  std::fprintf(stderr, "spectrum: accumulating momentum amplitudes...\n");
  const std::vector<std::string> comments{
      "t_end = " + format_double(t_end),
      "t_pulse = " + format_double(t_pulse),
      "t_post_pulse = " + format_double(t_end - t_pulse)};
  spectrum_tables(cfg, rec, dir, comments);

  std::printf("photoelectron spectrum: surfaces at +-%g, record %d samples\n",
              rec.x_surface, rec.n_samples());
  std::printf("  wrote %s\n", (dir / "surface_record.bin").c_str());
  std::printf("  wrote %s\n", (dir / "spectrum_k.csv").c_str());
  std::printf("  wrote %s\n", (dir / "spectrum_e.csv").c_str());
}

// ---------------------------------------------------------------------------
// gabor

std::string default_record_path(const RunConfig& c) {
  return (output_root(c) / "spectrum" / "surface_record.bin").string();
}

SurfaceRecord load_record(const std::string& explicit_path, const RunConfig& c) {
  const std::string path =
      explicit_path.empty() ? default_record_path(c) : explicit_path;
  if (!fs::exists(path))
    throw std::invalid_argument("record: no surface record at " + path +
                                " (run the spectrum command first)");
  return read_surface_record(path);
}

void cmd_gabor(const CommonArgs& args, const std::string& record_path) {
  RunConfig c = build_config(args);
  Workspace ws = make_workspace(std::move(c));  // validates; grid unused below
  const RunConfig& cfg = ws.config;
  SurfaceRecord rec = load_record(record_path, cfg);
  const fs::path dir = command_dir(cfg, "gabor");

  const double period = laser_period(cfg);
  const double sigma = cfg.gabor_sigma > 0.0 ? cfg.gabor_sigma : period;
  const double spacing =
      cfg.gabor_center_spacing > 0.0 ? cfg.gabor_center_spacing : 0.5 * period;
  const double start = cfg.gabor_center_start;
  const double stop = cfg.gabor_center_stop > 0.0 ? cfg.gabor_center_stop
                                                  : rec.t[rec.n_samples() - 1];
  const int n_centers = static_cast<int>(std::floor((stop - start) / spacing)) + 1;
  if (n_centers < 1) throw std::invalid_argument("gabor.center: empty center list");
  Eigen::ArrayXd centers(n_centers);
  for (int i = 0; i < n_centers; ++i) centers[i] = start + i * spacing;

  const double dk = cfg.gabor_dk > 0.0 ? cfg.gabor_dk : cfg.spectrum_dk;
  const Eigen::ArrayXd k =
      MomentumGrid{cfg.spectrum_k_min, cfg.spectrum_k_max, dk}.values();

  std::fprintf(stderr, "gabor: %d window centers, sigma = %.1f au...\n", n_centers,
               sigma);
  const Eigen::ArrayXXd map = gabor_map(rec, k, centers, sigma);

  // Long-format table: one row per (center, energy) pair.
  const EnergySpectrum probe = energy_spectrum(k, map.row(0).transpose());
  const int n_e = static_cast<int>(probe.energy.size());
  Eigen::ArrayXd col_tc(n_centers * n_e), col_cycle(n_centers * n_e),
      col_e(n_centers * n_e), col_y(n_centers * n_e);
  for (int g = 0; g < n_centers; ++g) {
    const EnergySpectrum row = energy_spectrum(k, map.row(g).transpose());
    for (int j = 0; j < n_e; ++j) {
      const int r = g * n_e + j;
      col_tc[r] = centers[g];
      col_cycle[r] = centers[g] / period;
      col_e[r] = row.energy[j];
      col_y[r] = row.yield[j];
    }
  }
  write_csv((dir / "gabor_map.csv").string(), cfg,
            {{"t_center[au]", col_tc},
             {"t_center[cycles]", col_cycle},
             {"energy[au]", col_e},
             {"yield[au]", col_y}},
            {"sigma = " + format_double(sigma)});

  std::printf("time-of-flight map: %d centers x %d energies\n", n_centers, n_e);
  std::printf("  wrote %s\n", (dir / "gabor_map.csv").c_str());
}

// ---------------------------------------------------------------------------
// scan

std::string amplitude_tag(double a0) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", a0);
  std::string tag = buf;
  for (char& ch : tag)
    if (ch == '.') ch = 'p';
  return tag;
}

double ati_center(const RunConfig& cfg, const Eigen::VectorXd& energies) {
  if (cfg.scan_ati_energy > 0.0) return cfg.scan_ati_energy;
  const double eps = energies[cfg.ground_n_orbitals - 1];
  const double e_max = 0.5 * cfg.spectrum_k_max * cfg.spectrum_k_max;
  const auto ladder = photon_ladder(eps, cfg.laser_frequency, e_max);
  if (ladder.empty()) throw std::invalid_argument("scan.ati_energy: ladder empty");
  return ladder.front().energy;
}

void cmd_scan(const CommonArgs& args) {
  RunConfig c = build_config(args);
  if (c.drive_kind == "none") c.drive_kind = "pulse";
  if (c.drive_kind != "pulse")
    throw std::invalid_argument("drive.kind: scan needs a pulse drive");
  const std::vector<double> amplitudes = scan_amplitude_list(c);
  if (amplitudes.size() < 3)
    throw std::invalid_argument("scan.amplitudes: need at least 3 for a fit");
  validate_config(c);

  Workspace ws0 = make_workspace(c);
  GroundArtifacts g = ensure_ground(ws0, ground_cache_path(args, ws0.config));
  const fs::path dir = command_dir(ws0.config, "scan");

  const double e_ati = ati_center(ws0.config, g.energies);
  const double w_ati = ws0.config.scan_ati_window_fraction * ws0.config.laser_frequency;
  const double e_pl = ws0.config.scan_plasmon_energy;
  const double w_pl = ws0.config.scan_plasmon_window_fraction * ws0.config.modes_omega_b;

  const int n = static_cast<int>(amplitudes.size());
  Eigen::ArrayXd a0s(n), intensities(n), y_ati(n), y_pl(n);
  for (int i = 0; i < n; ++i) {
    RunConfig ci = c;
    ci.laser_a0 = amplitudes[i];
    Workspace ws = make_workspace(std::move(ci));
    const double t_end = spectrum_t_end(ws.config);
    std::fprintf(stderr, "scan %d/%d: a0 = %g, t_end = %.0f au...\n", i + 1, n,
                 amplitudes[i], t_end);
    SurfaceRecord rec = run_surface_collection(ws, g, t_end);

    const Eigen::ArrayXd k = MomentumGrid{ws.config.spectrum_k_min,
                                          ws.config.spectrum_k_max,
                                          ws.config.spectrum_dk}.values();
    const Eigen::ArrayXd y = photoelectron_spectrum(rec, k, TimeWindow::full());
    const EnergySpectrum es = energy_spectrum(k, y);
    write_csv((dir / ("spectrum_e_a0_" + amplitude_tag(amplitudes[i]) + ".csv")).string(),
              ws.config, {{"energy[au]", es.energy}, {"yield[au]", es.yield}});

    a0s[i] = amplitudes[i];
    intensities[i] = std::pow(amplitudes[i] * ws.config.laser_frequency, 2);
    y_ati[i] = window_yield(es.energy, es.yield, e_ati - w_ati, e_ati + w_ati);
    y_pl[i] = window_yield(es.energy, es.yield, e_pl - w_pl, e_pl + w_pl);
  }

  const SlopeFit fit_ati = log_log_fit(intensities, y_ati);
  const SlopeFit fit_pl = log_log_fit(intensities, y_pl);

  auto window_json = [](double center, double half, const Eigen::ArrayXd& y,
                        const SlopeFit& fit) {
    ordered_json w;
    w["center"] = center;
    w["half_width"] = half;
    w["yields"] = std::vector<double>(y.data(), y.data() + y.size());
    w["exponent"] = fit.slope;
    w["rms_log_residual"] = fit.rms_residual;
    return w;
  };
  ordered_json j;
  j["config_hash"] = hash_string(ws0.config);
  j["omega_laser"] = ws0.config.laser_frequency;
  j["amplitudes"] = std::vector<double>(a0s.data(), a0s.data() + n);
  j["intensities"] = std::vector<double>(intensities.data(), intensities.data() + n);
  j["ati"] = window_json(e_ati, w_ati, y_ati, fit_ati);
  j["plasmon"] = window_json(e_pl, w_pl, y_pl, fit_pl);
  write_json(dir / "scaling.json", j);

  std::printf("intensity scaling over %d amplitudes:\n", n);
  std::printf("  ATI window     E = %.4f +- %.4f : exponent %.2f\n", e_ati, w_ati,
              fit_ati.slope);
  std::printf("  plasmon window E = %.4f +- %.4f : exponent %.2f\n", e_pl, w_pl,
              fit_pl.slope);
  std::printf("  wrote %s\n", (dir / "scaling.json").c_str());
}

// ---------------------------------------------------------------------------
// analyze

void cmd_analyze(const CommonArgs& args, const std::string& record_path) {
  RunConfig c = build_config(args);
  Workspace ws = make_workspace(std::move(c));
  const RunConfig& cfg = ws.config;
  SurfaceRecord rec = load_record(record_path, cfg);
  GroundArtifacts g = ensure_ground(ws, ground_cache_path(args, cfg));
  const fs::path dir = command_dir(cfg, "analyze");

  const Eigen::ArrayXd k = MomentumGrid{cfg.spectrum_k_min, cfg.spectrum_k_max,
                                        cfg.spectrum_dk}.values();
  const Eigen::ArrayXd y = photoelectron_spectrum(rec, k, TimeWindow::full());
  const EnergySpectrum es = energy_spectrum(k, y);

  PeakOptions po;
  po.min_rel_height = 1e-4;
  const std::vector<Peak> peaks = find_peaks(es.energy, es.yield, po);
  Eigen::ArrayXd pk_e(peaks.size()), pk_h(peaks.size()), pk_w(peaks.size());
  for (size_t i = 0; i < peaks.size(); ++i) {
    pk_e[i] = peaks[i].position;
    pk_h[i] = peaks[i].height;
    pk_w[i] = peaks[i].fwhm;
  }
  write_csv((dir / "peaks.csv").string(), cfg,
            {{"energy[au]", pk_e}, {"height[au]", pk_h}, {"fwhm[au]", pk_w}});

  const double e_max = 0.5 * cfg.spectrum_k_max * cfg.spectrum_k_max;
  auto ladder_json = [&](double eps, double omega) {
    ordered_json lines = ordered_json::array();
    for (const LadderLine& line : photon_ladder(eps, omega, e_max)) {
      ordered_json lj;
      lj["order"] = line.order;
      lj["energy"] = line.energy;
      double best = 0.0, dist = 1e300;
      for (const Peak& p : peaks)
        if (std::abs(p.position - line.energy) < dist) {
          dist = std::abs(p.position - line.energy);
          best = p.position;
        }
      if (dist < 1e300) {
        lj["nearest_peak"] = best;
        lj["offset"] = best - line.energy;
      }
      lines.push_back(lj);
    }
    return lines;
  };

  ordered_json j;
  j["config_hash"] = hash_string(cfg);
  j["n_peaks"] = peaks.size();
  const int n_occ = cfg.ground_n_orbitals;
  j["ladders"] = ordered_json::object();
  j["ladders"]["ati"] = {{"eps", g.energies[n_occ - 1]},
                         {"omega", cfg.laser_frequency},
                         {"lines", ladder_json(g.energies[n_occ - 1], cfg.laser_frequency)}};
  for (int i = std::max(0, n_occ - 3); i < n_occ; ++i) {
    const std::string name = "plasmon_" + std::to_string(i + 1);
    j["ladders"][name] = {{"eps", g.energies[i]},
                          {"omega", cfg.modes_omega_b},
                          {"lines", ladder_json(g.energies[i], cfg.modes_omega_b)}};
  }
  write_json(dir / "analysis.json", j);

  std::printf("analysis: %zu peaks above threshold\n", peaks.size());
  for (size_t i = 0; i < peaks.size() && i < 8; ++i)
    std::printf("  E = %.4f  height = %.3e  fwhm = %.4f\n", peaks[i].position,
                peaks[i].height, peaks[i].fwhm);
  std::printf("  wrote %s\n", (dir / "peaks.csv").c_str());
  std::printf("  wrote %s\n", (dir / "analysis.json").c_str());
}

}  // namespace

int main(int argc, char** argv) try {
  CLI::App app{"1D time-dependent Kohn-Sham model of a 40-electron cluster"};
  app.require_subcommand(1);

  CommonArgs a_ground, a_kick, a_spectrum, a_gabor, a_scan, a_analyze;
  bool resume = false;
  std::string gabor_record, analyze_record;

  CLI::App* ground = app.add_subcommand("ground", "solve the self-consistent ground state");
  add_common(ground, a_ground);
  ground->callback([&] { cmd_ground(a_ground); });

  CLI::App* kick = app.add_subcommand("kick", "delta-kick linear response spectrum");
  add_common(kick, a_kick);
  kick->callback([&] { cmd_kick(a_kick); });

  CLI::App* spectrum = app.add_subcommand("spectrum", "laser pulse photoelectron spectrum");
  add_common(spectrum, a_spectrum);
  spectrum->add_flag("--resume", resume, "continue from the last checkpoint");
  spectrum->callback([&] { cmd_spectrum(a_spectrum, resume); });

  CLI::App* gabor = app.add_subcommand("gabor", "time-windowed spectra from a surface record");
  add_common(gabor, a_gabor);
  gabor->add_option("--record", gabor_record, "surface record file");
  gabor->callback([&] { cmd_gabor(a_gabor, gabor_record); });

  CLI::App* scan = app.add_subcommand("scan", "yield-vs-intensity scaling over amplitudes");
  add_common(scan, a_scan);
  scan->callback([&] { cmd_scan(a_scan); });

  CLI::App* analyze = app.add_subcommand("analyze", "peak and ladder report from a record");
  add_common(analyze, a_analyze);
  analyze->add_option("--record", analyze_record, "surface record file");
  analyze->callback([&] { cmd_analyze(a_analyze, analyze_record); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
} catch (const ConvergenceFailure& e) {
  std::fprintf(stderr, "error: %s\n", e.what());
  return 3;
} catch (const NumericFailure& e) {
  std::fprintf(stderr, "error: %s\n", e.what());
  return 4;
} catch (const std::invalid_argument& e) {
  std::fprintf(stderr, "error: %s\n", e.what());
  return 2;
} catch (const std::exception& e) {
  std::fprintf(stderr, "error: %s\n", e.what());
  return 1;
}
