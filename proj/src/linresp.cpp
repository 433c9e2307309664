#include "tdks/linresp.hpp"

#include "tdks/analysis.hpp"
#include "tdks/fft.hpp"
#include "tdks/orbitals.hpp"

namespace tdks {

DipoleRecorder::DipoleRecorder(int n_orbitals, int stride)
    : n_orbitals_(n_orbitals), stride_(stride) {
  if (n_orbitals < 1) throw std::invalid_argument("dipole: n_orbitals must be >= 1");
  if (stride < 1) throw std::invalid_argument("dipole: stride must be >= 1");
}

void DipoleRecorder::sample(const Propagator& prop) {
  const bool keep = (calls_++ % stride_) == 0;
  if (!keep) return;
  const auto& orb = prop.orbitals();
  if (orb.n_orbitals() != n_orbitals_)
    throw std::invalid_argument("dipole: orbital count changed under recorder");
  const auto& grid = prop.grid();
  t_.push_back(prop.time());
  double total = 0.0;
  for (int i = 0; i < n_orbitals_; ++i) {
    const double d =
        orb.occupancy * grid.dx * (grid.x * orb.phi.col(i).abs2()).sum();
    orbital_.push_back(d);
    total += d;
  }
  total_.push_back(total);
}

DipoleRecord DipoleRecorder::take() {
  const int n = static_cast<int>(t_.size());
  if (n < 2) throw std::runtime_error("dipole: record too short");
  DipoleRecord rec;
  rec.dt = t_[1] - t_[0];
  rec.t = Eigen::Map<Eigen::ArrayXd>(t_.data(), n);
  rec.total = Eigen::Map<Eigen::ArrayXd>(total_.data(), n);
  rec.orbital = Eigen::Map<
      Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      orbital_.data(), n, n_orbitals_);
  return rec;
}

PowerSpectrum dipole_power_spectrum(const Eigen::ArrayXd& signal, double dt,
                                    int pad_factor) {
  const int n = static_cast<int>(signal.size());
  if (n < 8) throw std::invalid_argument("power spectrum: signal too short");
  if (!(dt > 0.0)) throw std::invalid_argument("power spectrum: dt must be positive");
  if (pad_factor < 1) throw std::invalid_argument("power spectrum: pad_factor must be >= 1");

  Eigen::ArrayXd work = signal - signal.mean();
  const Eigen::ArrayXd idx = Eigen::ArrayXd::LinSpaced(n, 0.0, n - 1.0);
  work *= 0.5 * (1.0 - (2.0 * M_PI / (n - 1.0) * idx).cos());  // Hann

  const int n_pad = next_pow2(pad_factor * n);
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(n_pad);
  padded.head(n) = work.matrix();
  const Eigen::VectorXcd spec = fft_forward_real(padded);

  const int n_out = n_pad / 2 + 1;
  PowerSpectrum out;
  out.omega = 2.0 * M_PI / (n_pad * dt) *
              Eigen::ArrayXd::LinSpaced(n_out, 0.0, n_out - 1.0);
  out.power = out.omega.pow(4) * spec.head(n_out).array().abs2();
  return out;
}

std::vector<PowerSpectrum> orbital_power_spectra(const DipoleRecord& rec,
                                                 int pad_factor) {
  std::vector<PowerSpectrum> out;
  out.reserve(rec.n_orbitals());
  for (int i = 0; i < rec.n_orbitals(); ++i)
    out.push_back(dipole_power_spectrum(rec.orbital.col(i), rec.dt, pad_factor));
  return out;
}

std::vector<Mode> classify_modes(const PowerSpectrum& total,
                                 const std::vector<PowerSpectrum>& per_orbital,
                                 const ModeCatalogOptions& opt) {
  double lo = opt.omega_min;
  double hi = opt.omega_max > 0.0 ? opt.omega_max : total.omega[total.omega.size() - 1];

  // Band-limited view of the total spectrum.
  std::vector<int> band;
  for (int j = 0; j < total.omega.size(); ++j)
    if (total.omega[j] >= lo && total.omega[j] <= hi) band.push_back(j);
  if (band.size() < 3) return {};
  Eigen::ArrayXd w(band.size()), p(band.size());
  for (size_t j = 0; j < band.size(); ++j) {
    w[j] = total.omega[band[j]];
    p[j] = total.power[band[j]];
  }

  PeakOptions po;
  po.min_rel_height = opt.min_rel_height;
  if (opt.median_floor_factor > 0.0) {
    // Reject wiggles that merely poke above the background: a real resonance
    // stands well clear of the median spectral floor.
    Eigen::ArrayXd sorted = p;
    std::sort(sorted.data(), sorted.data() + sorted.size());
    po.min_height = opt.median_floor_factor * sorted[sorted.size() / 2];
  }
  std::vector<Mode> catalog;
  for (const Peak& peak : find_peaks(w, p, po)) {
    Mode m;
    m.omega = peak.position;
    m.height = peak.height;
    m.fwhm = peak.fwhm;
    int aligned = 0;
    for (const PowerSpectrum& ps : per_orbital) {
      const Peak q = strongest_peak_in(ps.omega, ps.power,
                                       peak.position - opt.align_window,
                                       peak.position + opt.align_window);
      // The orbital must not merely have weight there: its own resonance in
      // the neighborhood has to sit on the shared frequency.
      if (q.height > 0.0 && std::abs(q.position - peak.position) <= opt.align_window)
        ++aligned;
    }
    m.aligned_fraction =
        per_orbital.empty() ? 0.0
                            : static_cast<double>(aligned) / per_orbital.size();
    m.collective = !per_orbital.empty() && m.aligned_fraction >= opt.align_fraction;
    catalog.push_back(m);
  }
  std::sort(catalog.begin(), catalog.end(),
            [](const Mode& a, const Mode& b) { return a.omega < b.omega; });
  return catalog;
}

CurrentRecorder::CurrentRecorder(int n_points, int stride)
    : n_points_(n_points), stride_(stride) {
  if (n_points < 4) throw std::invalid_argument("current: grid too small");
  if (stride < 1) throw std::invalid_argument("current: stride must be >= 1");
}

void CurrentRecorder::sample(const Propagator& prop) {
  const bool keep = (calls_++ % stride_) == 0;
  if (!keep) return;
  if (prop.grid().n_points != n_points_)
    throw std::invalid_argument("current: grid changed under recorder");
  t_.push_back(prop.time());
  const RealField j =
      current_density(prop.grid(), prop.orbitals(), prop.vector_potential());
  j_.insert(j_.end(), j.data(), j.data() + j.size());
}

CurrentMapRecord CurrentRecorder::take() {
  const int n = static_cast<int>(t_.size());
  if (n < 1) throw std::runtime_error("current: empty record");
  CurrentMapRecord rec;
  rec.dt = n > 1 ? t_[1] - t_[0] : 0.0;
  rec.t = Eigen::Map<Eigen::ArrayXd>(t_.data(), n);
  rec.j = Eigen::Map<
      Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      j_.data(), n, n_points_);
  return rec;
}

}  // namespace tdks
