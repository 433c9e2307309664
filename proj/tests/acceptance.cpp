// Acceptance gate: reproduces the headline physics numbers end to end and
// prints one PASS/FAIL line per criterion.  Exit status is nonzero when any
// criterion fails.  Criterion numbers on the command line select a subset
// (e.g. "./acceptance 1 4 9"); no arguments runs everything.
//
// The heavy artifacts (ground state, kick responses, the long pulse record,
// the intensity scans) are shared across criteria, so the whole gate is six
// production propagations plus analysis, roughly twenty minutes single-core.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tdks/analysis.hpp"
#include "tdks/config.hpp"
#include "tdks/dynamics.hpp"
#include "tdks/groundstate.hpp"
#include "tdks/io.hpp"
#include "tdks/linresp.hpp"
#include "tdks/pipeline.hpp"
#include "tdks/potentials.hpp"
#include "tdks/tsurff.hpp"

using namespace tdks;

namespace {

int g_failed = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %d %-28s %s%s%s\n", criterion, name, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

void progress(const char* what) {
  std::fprintf(stderr, "[acceptance] %s\n", what);
  std::fflush(stderr);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

// ---------------------------------------------------------------------------
// Shared closed forms: free Gaussian packet and its analytic surface record.

Complex packet_value(double x, double t, double x0, double sigma, double k0) {
  const Complex m = 1.0 + I * t / (2.0 * sigma * sigma);
  const double d = x - x0 - k0 * t;
  return std::pow(2.0 * M_PI * sigma * sigma, -0.25) / std::sqrt(m) *
         std::exp(-d * d / (4.0 * sigma * sigma * m) +
                  I * (k0 * (x - x0) - 0.5 * k0 * k0 * t));
}

Complex packet_derivative(double x, double t, double x0, double sigma, double k0) {
  const Complex m = 1.0 + I * t / (2.0 * sigma * sigma);
  const double d = x - x0 - k0 * t;
  return packet_value(x, t, x0, sigma, k0) *
         (-d / (2.0 * sigma * sigma * m) + I * k0);
}

SurfaceRecord analytic_record(double x_s, double x0, double sigma, double k0,
                              double t_end, double dt) {
  const int n = static_cast<int>(std::lround(t_end / dt)) + 1;
  SurfaceRecord rec;
  rec.x_surface = x_s;
  rec.dt = dt;
  rec.n_orbitals = 1;
  rec.t.resize(n);
  rec.a = Eigen::ArrayXd::Zero(n);
  rec.alpha = Eigen::ArrayXd::Zero(n);
  rec.phi_r.resize(n, 1);
  rec.dphi_r.resize(n, 1);
  rec.phi_l.resize(n, 1);
  rec.dphi_l.resize(n, 1);
  for (int s = 0; s < n; ++s) {
    const double t = s * dt;
    rec.t[s] = t;
    rec.phi_r(s, 0) = packet_value(x_s, t, x0, sigma, k0);
    rec.dphi_r(s, 0) = packet_derivative(x_s, t, x0, sigma, k0);
    rec.phi_l(s, 0) = packet_value(-x_s, t, x0, sigma, k0);
    rec.dphi_l(s, 0) = packet_derivative(-x_s, t, x0, sigma, k0);
  }
  return rec;
}

// Every stride-th sample of a record; enough time resolution for slow
// electrons at a fraction of the analysis cost.
SurfaceRecord stride_record(const SurfaceRecord& rec, int stride) {
  const int n = (rec.n_samples() + stride - 1) / stride;
  SurfaceRecord out;
  out.x_surface = rec.x_surface;
  out.dt = rec.dt * stride;
  out.n_orbitals = rec.n_orbitals;
  out.t.resize(n);
  out.a.resize(n);
  out.alpha.resize(n);
  out.phi_r.resize(n, rec.n_orbitals);
  out.dphi_r.resize(n, rec.n_orbitals);
  out.phi_l.resize(n, rec.n_orbitals);
  out.dphi_l.resize(n, rec.n_orbitals);
  for (int s = 0; s < n; ++s) {
    const int src = s * stride;
    out.t[s] = rec.t[src];
    out.a[s] = rec.a[src];
    out.alpha[s] = rec.alpha[src];
    out.phi_r.row(s) = rec.phi_r.row(src);
    out.dphi_r.row(s) = rec.dphi_r.row(src);
    out.phi_l.row(s) = rec.phi_l.row(src);
    out.dphi_l.row(s) = rec.dphi_l.row(src);
  }
  return out;
}

// Spectrum of a narrow energy band on a fine momentum grid, folded to the
// energy axis; the honest way to measure positions and widths of spikes that
// are much narrower than the survey grid.
struct SpikeScan {
  Eigen::ArrayXd energy;
  Eigen::ArrayXd yield;
};

SpikeScan fine_energy_scan(const SurfaceRecord& rec, double e_center,
                           double e_half_width, double dk = 2.5e-4) {
  const double k_lo = std::sqrt(2.0 * std::max(1e-6, e_center - e_half_width));
  const double k_hi = std::sqrt(2.0 * (e_center + e_half_width));
  const Eigen::ArrayXd k = MomentumGrid{k_lo, k_hi, dk}.values();
  const Eigen::ArrayXd y = photoelectron_spectrum(rec, k, TimeWindow::full());
  SpikeScan out;
  out.energy = 0.5 * k.square();
  // Forward-moving electrons only on this side of the fold; the backward
  // branch carries the same ladder and would only double the counts.
  out.yield = y;
  return out;
}

std::optional<Peak> spike_near(const SurfaceRecord& rec, double e_line,
                               double tolerance) {
  SpikeScan scan = fine_energy_scan(rec, e_line, tolerance + 0.006);
  std::vector<Peak> peaks = find_peaks(scan.energy, scan.yield, {0.0, 1e-4});
  const Peak* best = nullptr;
  for (const Peak& p : peaks)
    if (std::abs(p.position - e_line) <= tolerance &&
        (!best || p.height > best->height))
      best = &p;
  if (!best) return std::nullopt;
  return *best;
}

// ---------------------------------------------------------------------------
// Criteria

void criterion_1(const GroundArtifacts& ground) {
  const double e20 = ground.energies[19];
  const double e21 = ground.energies[20];
  const bool ok = std::abs(e20 - (-0.1709)) <= 5e-4 && std::abs(e21 - (-0.0984)) <= 5e-4;
  report(1, "ground-state levels", ok,
         fmt("e20 = %.6f (want -0.1709 +- 5e-4), e21 = %.6f (want -0.0984 +- 5e-4)",
             e20, e21));
}

void criterion_2(const Workspace& base, const GroundArtifacts& ground) {
  progress("criterion 2: unfrozen kick response (80000 steps)");
  RunConfig cfg = base.config;
  cfg.drive_kind = "kick";
  Workspace ws = make_workspace(cfg);
  DipoleRecord rec = run_kick_collection(ws, ground);

  PowerSpectrum total = dipole_power_spectrum(rec.total, rec.dt, cfg.linresp_pad_factor);
  std::vector<PowerSpectrum> per_orb = orbital_power_spectra(rec, cfg.linresp_pad_factor);
  ModeCatalogOptions opt;
  opt.omega_min = 0.02;
  opt.omega_max = cfg.linresp_omega_max;
  opt.align_window = cfg.linresp_align_window;
  opt.align_fraction = cfg.linresp_align_fraction;
  std::vector<Mode> modes = classify_modes(total, per_orb, opt);

  std::sort(modes.begin(), modes.end(),
            [](const Mode& a, const Mode& b) { return a.height > b.height; });
  bool ok = modes.size() >= 2;
  std::string detail;
  if (ok) {
    const Mode& m0 = modes[0];
    const Mode& m1 = modes[1];
    const double lo = std::min(m0.omega, m1.omega);
    const double hi = std::max(m0.omega, m1.omega);
    ok = std::abs(lo - 0.106) <= 0.003 && std::abs(hi - 0.156) <= 0.003 &&
         m0.collective && m1.collective;
    detail = fmt("dominant modes at %.4f (aligned %.0f/20) and %.4f (aligned %.0f/20)",
                 lo, 20.0 * (m0.omega < m1.omega ? m0 : m1).aligned_fraction,
                 hi, 20.0 * (m0.omega < m1.omega ? m1 : m0).aligned_fraction);
  } else {
    detail = fmt("only %zu modes detected", modes.size());
  }
  report(2, "collective modes", ok, detail);
}

void criterion_3(const Workspace& base, const GroundArtifacts& ground) {
  progress("criterion 3: frozen kick response (80000 steps)");
  RunConfig cfg = base.config;
  cfg.drive_kind = "kick";
  cfg.time_frozen = true;
  Workspace ws = make_workspace(cfg);
  DipoleRecord rec = run_kick_collection(ws, ground);
  PowerSpectrum spec = dipole_power_spectrum(rec.total, rec.dt, cfg.linresp_pad_factor);

  const double allowed = ground.energies[20] - ground.energies[19];   // HOMO -> LUMO
  const double forbidden_parity = ground.energies[21] - ground.energies[19];
  const double forbidden_pauli = ground.energies[19] - ground.energies[18];

  Peak peak = strongest_peak_in(spec.omega, spec.power, allowed - 0.003, allowed + 0.003);
  bool ok = peak.height > 0.0;
  std::string detail;
  if (!ok) {
    detail = fmt("no peak near %.4f", allowed);
  } else {
    // The allowed line's own Fourier mainlobe may reach into a forbidden
    // window (the level spacings differ by only ~2.4e-3); exclude a few
    // resolution widths around the detected line before weighing leftovers.
    const double resolution = 2.0 * M_PI / 2e4;
    const double guard = 3.0 * resolution;
    auto residual = [&](double center) {
      double worst = 0.0;
      for (int i = 0; i < spec.omega.size(); ++i) {
        const double w = spec.omega[i];
        if (std::abs(w - center) > 0.003) continue;
        if (std::abs(w - peak.position) < guard) continue;
        worst = std::max(worst, spec.power[i]);
      }
      return worst / peak.height;
    };
    const double parity_weight = residual(forbidden_parity);
    const double pauli_weight = residual(forbidden_pauli);
    ok = parity_weight < 0.01 && pauli_weight < 0.01;
    detail = fmt("allowed peak at %.5f; forbidden residuals: parity %.2e, pauli %.2e "
                 "(both must be < 1e-2 of peak)",
                 peak.position, parity_weight, pauli_weight);
  }
  report(3, "frozen selection rules", ok, detail);
}

void criterion_4(const Workspace& ws, const GroundArtifacts& ground) {
  progress("criterion 4: momentum-spectrum oracle and zero-drive floor");
  // Analytic surface record of a free packet against its exact momentum law.
  SurfaceRecord rec = analytic_record(100.0, 0.0, 4.0, 0.8, 600.0, 0.25);
  const Eigen::ArrayXd k = MomentumGrid{0.3, 1.3, 2e-3}.values();
  const Eigen::ArrayXd y = photoelectron_spectrum(rec, k, TimeWindow::full());
  const double sk = 1.0 / (2.0 * 4.0);
  const Eigen::ArrayXd exact =
      std::pow(2.0 * M_PI * sk * sk, -0.5) * (-(k - 0.8).square() / (2.0 * sk * sk)).exp();
  const double err = (y - exact).abs().maxCoeff() / exact.maxCoeff();

  // Undriven cluster: nothing physical crosses the surfaces, so the spectrum
  // sits at the numerical floor.  That floor is the self-consistency residual
  // (1e-9 per orbital) whose high-k content disperses out to the surfaces,
  // giving |b| ~ 1e-9 -- thirteen orders below the weakest physical feature.
  Propagator prop(ws.grid, ws.ionic, ws.hartree, ground.orbitals, {},
                  propagation_options(ws.config));
  SurfaceRecorder recorder(ws.grid, surface_position(ws.config),
                           ws.config.ground_n_orbitals);
  recorder.sample(prop);
  for (int s = 0; s < 600; ++s) {
    prop.step();
    recorder.sample(prop);
  }
  const Eigen::ArrayXd k2 = MomentumGrid{-2.0, 2.0, 1e-2}.values();
  const double floor =
      photoelectron_spectrum(recorder.take(), k2, TimeWindow::full()).maxCoeff();

  const bool ok = err < 1e-3 && floor < 1e-18;
  report(4, "momentum-spectrum oracle", ok,
         fmt("packet L-inf error %.2e of peak (< 1e-3), zero-drive floor %.2e (< 1e-18)",
             err, floor));
}

struct Fig5Analysis {
  bool comb_ok = false;
  bool spikes_ok = false;
  bool landmarks_ok = false;
  std::string detail;
};

Fig5Analysis analyze_fig5(const SurfaceRecord& rec, const GroundArtifacts& ground,
                          const RunConfig& cfg) {
  Fig5Analysis out;
  const double omega_l = cfg.laser_frequency;
  const double omega_b = cfg.modes_omega_b;
  const double t_pulse = pulse_duration(cfg);
  const double e20 = ground.energies[19];

  // ATI comb on a survey grid.  Lines live at e20 + n*omega_l; their width is
  // set by the pulse duration, so that is the spacing tolerance as well.
  const Eigen::ArrayXd k = MomentumGrid{0.15, 0.85, 1e-3}.values();
  const Eigen::ArrayXd yk = photoelectron_spectrum(rec, k, TimeWindow::full());
  const Eigen::ArrayXd energy = 0.5 * k.square();
  const double comb_tol = 2.0 * M_PI / t_pulse;

  std::vector<double> comb;
  std::vector<LadderLine> lines = photon_ladder(e20, omega_l, 0.30);
  for (const LadderLine& line : lines) {
    Peak p = strongest_peak_in(energy, yk, line.energy - omega_l / 4.0,
                               line.energy + omega_l / 4.0);
    if (p.height > 0.0) comb.push_back(p.position);
  }
  double worst_spacing = 0.0;
  for (size_t i = 1; i < comb.size(); ++i)
    worst_spacing = std::max(worst_spacing, std::abs(comb[i] - comb[i - 1] - omega_l));
  out.comb_ok = comb.size() >= 4 && worst_spacing <= comb_tol;

  // Narrow spikes on the plasmon ladders e_i + n*omega_b, i in {18,19,20}
  // (1-based).  The HOMO ladder coincides with the ATI comb (omega_b is three
  // laser photons), so the narrow family comes from the deeper levels.
  const double narrow_fwhm = 2.5e-3;
  const double spacing_tol = 1.5e-3;
  int best_chain = 0;
  double spike_example = 0.0;
  for (int level = 17; level <= 19; ++level) {
    std::vector<double> found;
    for (const LadderLine& line : photon_ladder(ground.energies[level], omega_b, 0.45)) {
      std::optional<Peak> p = spike_near(rec, line.energy, 0.003);
      if (p && p->fwhm > 0.0 && p->fwhm < narrow_fwhm)
        found.push_back(p->position);
      else
        found.push_back(-1.0);  // break the chain
    }
    int chain = 0, run = 1;
    for (size_t i = 1; i < found.size(); ++i) {
      if (found[i] > 0.0 && found[i - 1] > 0.0 &&
          std::abs(found[i] - found[i - 1] - omega_b) <= spacing_tol)
        ++run;
      else
        run = 1;
      chain = std::max(chain, run);
    }
    if (!found.empty() && found[0] > 0.0) chain = std::max(chain, 1);
    if (chain > best_chain) {
      best_chain = chain;
      for (double f : found)
        if (f > 0.0) {
          spike_example = f;
          break;
        }
    }
  }
  out.spikes_ok = best_chain >= 3;

  // The two headline landmarks.
  Peak ati = strongest_peak_in(energy, yk, 0.037 - 0.003, 0.037 + 0.003);
  std::optional<Peak> plasmon = spike_near(rec, 0.071, 0.003);
  out.landmarks_ok = ati.height > 0.0 && plasmon.has_value();

  out.detail = fmt("comb: %zu lines, worst spacing error %.2e (tol %.2e); "
                   "plasmon chain length %d (first spike %.4f); "
                   "landmarks 0.037%s / 0.071%s",
                   comb.size(), worst_spacing, comb_tol, best_chain, spike_example,
                   ati.height > 0.0 ? " found" : " MISSING",
                   plasmon ? " found" : " MISSING");
  return out;
}

void criterion_6(const SurfaceRecord& full, const GroundArtifacts& ground,
                 const RunConfig& cfg) {
  progress("criterion 6: time-of-flight map");
  const double omega_l = cfg.laser_frequency;
  const double period = 2.0 * M_PI / omega_l;
  const double e20 = ground.energies[19];

  SurfaceRecord rec = stride_record(full, 4);
  const Eigen::ArrayXd k = MomentumGrid{0.21, 0.56, 2e-3}.values();
  const double t_end = full.t[full.n_samples() - 1];
  const int n_centers = static_cast<int>(std::floor(t_end / period)) + 1;
  Eigen::ArrayXd centers(n_centers);
  for (int i = 0; i < n_centers; ++i) centers[i] = i * period;

  Eigen::ArrayXXd map = gabor_map(rec, k, centers, period);

  // Energy windows: a quarter photon around each of the first three comb
  // lines, and the plasmon spike band around 0.071.
  std::vector<std::pair<double, double>> ati_windows;
  for (const LadderLine& line : photon_ladder(e20, omega_l, 0.15))
    ati_windows.push_back({line.energy - omega_l / 4.0, line.energy + omega_l / 4.0});
  const std::pair<double, double> plasmon_window{0.071 - 0.003, 0.071 + 0.003};

  auto window_sum = [&](const Eigen::ArrayXd& row, double e_lo, double e_hi) {
    const double k_lo = std::sqrt(2.0 * std::max(0.0, e_lo));
    const double k_hi = std::sqrt(2.0 * e_hi);
    return window_yield(k, row, k_lo, k_hi);
  };

  double ati_total = 0.0, ati_early = 0.0, plasmon_total = 0.0, plasmon_late = 0.0;
  for (int c = 0; c < n_centers; ++c) {
    const Eigen::ArrayXd row = map.row(c);
    double ati = 0.0;
    for (const auto& w : ati_windows) ati += window_sum(row, w.first, w.second);
    const double pl = window_sum(row, plasmon_window.first, plasmon_window.second);
    const double cycles = centers[c] / period;
    ati_total += ati;
    plasmon_total += pl;
    if (cycles <= 30.0 + 1e-9) ati_early += ati;
    if (cycles > 30.0 + 1e-9) plasmon_late += pl;
  }
  const double early_fraction = ati_total > 0.0 ? ati_early / ati_total : 0.0;
  const double late_fraction = plasmon_total > 0.0 ? plasmon_late / plasmon_total : 0.0;
  const bool ok = ati_total > 0.0 && early_fraction >= 0.95 && plasmon_total > 0.0 &&
                  late_fraction > 0.01;
  report(6, "time-of-flight map", ok,
         fmt("ATI yield within 30 cycles: %.1f%% (need >= 95%%); plasmon yield after "
             "30 cycles: %.1f%% (need > 1%%)",
             100.0 * early_fraction, 100.0 * late_fraction));
}

void criterion_7(const Workspace& base, const GroundArtifacts& ground) {
  struct ScanCase {
    double omega;
    double e_min;
    double ati_center, ati_half;
    double plasmon_center, plasmon_half;
    double n_ati, tol_ati;
    double n_plasmon, tol_plasmon;
  };
  const double e20 = ground.energies[19];
  const double e19 = ground.energies[18];
  // 0.052 drive: 4-photon ATI line and the two-quantum 0.156-mode line from
  // the second level down.  0.035 drive: 5-photon line barely above threshold
  // and the two-quantum 0.106-mode line; that one needs a slim window because
  // the six-photon comb line sits only 2e-3 below it.
  const ScanCase cases[2] = {
      {0.052, 0.01, e20 + 4 * 0.052, 0.25 * 0.052, e19 + 2 * 0.156, 0.1 * 0.156,
       3.88, 0.4, 5.71, 0.6},
      {0.035, 0.002, e20 + 5 * 0.035, 0.25 * 0.035, e20 + 2 * 0.106, 0.00125,
       5.02, 0.4, 6.24, 0.6},
  };

  bool all_ok = true;
  std::string detail;
  for (const ScanCase& sc : cases) {
    const std::vector<double> amplitudes{0.004, 0.005, 0.006};
    Eigen::ArrayXd intensity(3), y_ati(3), y_plasmon(3);
    for (size_t i = 0; i < amplitudes.size(); ++i) {
      progress(fmt("criterion 7: scan omega_L=%.3f a0=%.3f", sc.omega, amplitudes[i]).c_str());
      RunConfig cfg = base.config;
      cfg.drive_kind = "pulse";
      cfg.laser_frequency = sc.omega;
      cfg.laser_a0 = amplitudes[i];
      cfg.spectrum_e_min = sc.e_min;
      Workspace ws = make_workspace(cfg);
      SurfaceRecord rec = run_surface_collection(ws, ground, spectrum_t_end(cfg));

      const Eigen::ArrayXd k = MomentumGrid{-0.45, 0.45, 1e-3}.values();
      const Eigen::ArrayXd yk = photoelectron_spectrum(rec, k, TimeWindow::full());
      EnergySpectrum es = energy_spectrum(k, yk);
      intensity[i] = std::pow(amplitudes[i] * sc.omega, 2);
      y_ati[i] = window_yield(es.energy, es.yield,
                              std::max(sc.e_min, sc.ati_center - sc.ati_half),
                              sc.ati_center + sc.ati_half);
      y_plasmon[i] = window_yield(es.energy, es.yield, sc.plasmon_center - sc.plasmon_half,
                                  sc.plasmon_center + sc.plasmon_half);
    }
    const double n_ati = log_log_fit(intensity, y_ati).slope;
    const double n_plasmon = log_log_fit(intensity, y_plasmon).slope;
    const bool ok = std::abs(n_ati - sc.n_ati) <= sc.tol_ati &&
                    std::abs(n_plasmon - sc.n_plasmon) <= sc.tol_plasmon;
    all_ok = all_ok && ok;
    detail += fmt("%somega_L=%.3f: n_ati=%.2f (want %.2f +- %.1f), n_plasmon=%.2f "
                  "(want %.2f +- %.1f)",
                  detail.empty() ? "" : "; ", sc.omega, n_ati, sc.n_ati, sc.tol_ati,
                  n_plasmon, sc.n_plasmon, sc.tol_plasmon);
  }
  report(7, "intensity scaling", all_ok, detail);
}

void criterion_8(const SurfaceRecord& rec, const RunConfig& cfg) {
  progress("criterion 8: spike sharpening with record length");
  const double t_pulse = pulse_duration(cfg);
  const double tau = 4200.0;
  std::vector<double> widths;
  std::string detail = "fwhm(0.071):";
  for (double factor : {1.0, 1.5, 2.0}) {
    SurfaceRecord cut = truncate_record(rec, t_pulse + factor * tau);
    std::optional<Peak> spike = spike_near(cut, 0.071, 0.003);
    if (spike && spike->fwhm > 0.0) {
      widths.push_back(spike->fwhm);
      detail += fmt(" %.2e", spike->fwhm);
    } else {
      detail += " missing";
    }
  }
  const bool ok = widths.size() == 3 && widths[0] > widths[1] && widths[1] > widths[2];
  report(8, "plasmon-spike sharpening", ok, detail);
}

void criterion_9(const Workspace& base, const GroundArtifacts& ground) {
  progress("criterion 9: property suite");
  std::string detail;
  bool all_ok = true;
  auto note = [&](const char* name, bool ok, const std::string& d) {
    all_ok = all_ok && ok;
    detail += fmt("%s%s %s (%s)", detail.empty() ? "" : "; ", name,
                  ok ? "ok" : "FAILED", d.c_str());
  };

  {  // Norm conservation with the absorber off.
    PropagationOptions opt = propagation_options(base.config);
    opt.use_absorber = false;
    Propagator prop(base.grid, base.ionic, base.hartree, ground.orbitals,
                    make_kick(base.config.kick_strength), opt);
    double previous = total_norm(base.grid, prop.orbitals());
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      prop.step();
      const double now = total_norm(base.grid, prop.orbitals());
      worst = std::max(worst, std::abs(now - previous) / previous);
      previous = now;
    }
    note("norm/step", worst < 1e-10, fmt("%.2e", worst));
  }

  {  // Hartree solver against the direct double sum.
    RealField fft = base.hartree(ground.density);
    RealField direct = hartree_direct(base.grid, ground.density,
                                      base.config.ions_softening);
    const double err = (fft - direct).abs().maxCoeff();
    note("hartree", err < 1e-10, fmt("%.2e", err));
  }

  {  // Frozen response is linear in the kick strength.
    auto spectrum_peak = [&](double strength) {
      RunConfig cfg = base.config;
      cfg.drive_kind = "kick";
      cfg.time_frozen = true;
      cfg.kick_strength = strength;
      cfg.linresp_t_record = 2000.0;
      Workspace ws = make_workspace(cfg);
      DipoleRecord rec = run_kick_collection(ws, ground);
      PowerSpectrum spec = dipole_power_spectrum(rec.total, rec.dt);
      return std::sqrt(spec.power.maxCoeff());
    };
    const double ratio = spectrum_peak(2e-4) / spectrum_peak(1e-4);
    note("kick linearity", std::abs(ratio - 2.0) <= 0.04, fmt("ratio %.4f", ratio));
  }

  {  // Checkpoint-resume through the pipeline reproduces the whole record.
    RunConfig cfg = base.config;
    cfg.drive_kind = "kick";
    cfg.time_checkpoint_every = 200;
    Workspace ws = make_workspace(cfg);
    const double t_end = 100.0;
    SurfaceRecord straight = run_surface_collection(ws, ground, t_end);

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "tdks_acceptance";
    fs::create_directories(dir);
    const std::string ckpt = (dir / "checkpoint.bin").string();
    {  // First half, interrupted right after its periodic checkpoint.
      Propagator prop(ws.grid, ws.ionic, ws.hartree, ground.orbitals,
                      drive_from_config(cfg), propagation_options(cfg));
      SurfaceRecorder recorder(ws.grid, surface_position(cfg), cfg.ground_n_orbitals);
      recorder.sample(prop);
      for (int s = 0; s < 200; ++s) {
        prop.step();
        recorder.sample(prop);
      }
      write_surface_record(ckpt + ".record", cfg, recorder.snapshot());
      write_checkpoint(ckpt, cfg,
                       {prop.time(), prop.alpha(), prop.step_count(),
                        prop.orbitals().occupancy, prop.orbitals().phi});
    }
    SurfaceRecord resumed = run_surface_collection(ws, ground, t_end, ckpt, true);
    double err = (straight.phi_r - resumed.phi_r).abs().maxCoeff();
    err = std::max(err, (straight.phi_l - resumed.phi_l).abs().maxCoeff());
    err = std::max(err, (straight.dphi_r - resumed.dphi_r).abs().maxCoeff());
    err = std::max(err, (straight.alpha - resumed.alpha).abs().maxCoeff());
    fs::remove_all(dir);
    note("checkpoint-resume", err <= 1e-12, fmt("%.2e", err));
  }

  {  // Halving dt moves the dipole trace by less than 1e-4 relative.
    auto dipole_trace = [&](double dt, int stride) {
      PropagationOptions opt = propagation_options(base.config);
      opt.dt = dt;
      Propagator prop(base.grid, base.ionic, base.hartree, ground.orbitals,
                      make_kick(1e-3), opt);
      const int n_steps = static_cast<int>(std::lround(100.0 / dt));
      std::vector<double> d;
      for (int s = 0; s < n_steps; ++s) {
        prop.step();
        if ((s + 1) % stride == 0)
          d.push_back(dipole_moment(base.grid, prop.orbitals()));
      }
      return d;
    };
    std::vector<double> coarse = dipole_trace(0.05, 1);
    std::vector<double> fine = dipole_trace(0.025, 2);
    double diff = 0.0, scale = 0.0;
    for (size_t i = 0; i < coarse.size(); ++i) {
      diff = std::max(diff, std::abs(coarse[i] - fine[i]));
      scale = std::max(scale, std::abs(fine[i]));
    }
    note("dt-halving", diff / scale < 1e-4, fmt("%.2e relative", diff / scale));
  }

  report(9, "property suite", all_ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  auto wanted = [&](int c) { return selected.empty() || selected.count(c) > 0; };

  try {
    RunConfig cfg = default_config();
    Workspace ws = make_workspace(cfg);
    progress("solving ground state");
    GroundArtifacts ground = solve_ground_artifacts(ws);

    if (wanted(1)) criterion_1(ground);
    if (wanted(2)) criterion_2(ws, ground);
    if (wanted(3)) criterion_3(ws, ground);
    if (wanted(4)) criterion_4(ws, ground);

    if (wanted(5) || wanted(6) || wanted(8)) {
      progress("long pulse run for criteria 5/6/8 (43000 steps)");
      RunConfig fig5 = cfg;
      fig5.drive_kind = "pulse";
      fig5.time_t_end = pulse_duration(fig5) + 2.0 * 4200.0;
      Workspace ws5 = make_workspace(fig5);
      SurfaceRecord rec = run_surface_collection(ws5, ground, fig5.time_t_end);
      if (wanted(5)) {
        progress("criterion 5: peak ladders");
        Fig5Analysis a = analyze_fig5(rec, ground, fig5);
        report(5, "photoelectron ladders", a.comb_ok && a.spikes_ok && a.landmarks_ok,
               a.detail);
      }
      if (wanted(6)) criterion_6(rec, ground, fig5);
      if (wanted(8)) criterion_8(rec, fig5);
    }

    if (wanted(7)) criterion_7(ws, ground);
    if (wanted(9)) criterion_9(ws, ground);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "[acceptance] aborted: %s\n", e.what());
    return 2;
  }

  if (g_failed > 0) {
    std::printf("%d criterion(s) failed\n", g_failed);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
