#include "tdks/tsurff.hpp"

namespace tdks {

SurfaceRecorder::SurfaceRecorder(const SpatialGrid& grid, double x_surface,
                                 int n_orbitals, int stride)
    : x_surface_(x_surface), n_orbitals_(n_orbitals), stride_(stride) {
  if (!(x_surface > 0.0))
    throw std::invalid_argument("surface: x_surface must be positive");
  if (stride < 1) throw std::invalid_argument("surface: stride must be >= 1");
  j_right_ = grid.index_of(x_surface);
  j_left_ = grid.index_of(-x_surface);
  if (j_right_ < 1 || j_right_ > grid.n_points - 2 || j_left_ < 1)
    throw std::invalid_argument("surface: needs both neighbors on the grid");
}

void SurfaceRecorder::sample(const Propagator& prop) {
  const bool keep = (calls_++ % stride_) == 0;
  if (!keep) return;
  const auto& phi = prop.orbitals().phi;
  if (phi.cols() != n_orbitals_)
    throw std::invalid_argument("surface: orbital count changed under recorder");
  t_.push_back(prop.time());
  a_.push_back(prop.vector_potential());
  alpha_.push_back(prop.alpha());
  const double inv2dx = 1.0 / (2.0 * prop.grid().dx);
  for (int i = 0; i < n_orbitals_; ++i) {
    phi_r_.push_back(phi(j_right_, i));
    dphi_r_.push_back((phi(j_right_ + 1, i) - phi(j_right_ - 1, i)) * inv2dx);
    phi_l_.push_back(phi(j_left_, i));
    dphi_l_.push_back((phi(j_left_ + 1, i) - phi(j_left_ - 1, i)) * inv2dx);
  }
}

SurfaceRecord SurfaceRecorder::snapshot() const {
  const int n = static_cast<int>(t_.size());
  if (n < 2) throw std::runtime_error("surface: record too short");
  SurfaceRecord rec;
  rec.x_surface = x_surface_;
  rec.dt = t_[1] - t_[0];
  rec.n_orbitals = n_orbitals_;
  rec.t = Eigen::Map<const Eigen::ArrayXd>(t_.data(), n);
  rec.a = Eigen::Map<const Eigen::ArrayXd>(a_.data(), n);
  rec.alpha = Eigen::Map<const Eigen::ArrayXd>(alpha_.data(), n);
  auto pack = [&](const std::vector<Complex>& v) {
    return Eigen::ArrayXXcd(
        Eigen::Map<const Eigen::Array<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                      Eigen::RowMajor>>(v.data(), n, n_orbitals_));
  };
  rec.phi_r = pack(phi_r_);
  rec.dphi_r = pack(dphi_r_);
  rec.phi_l = pack(phi_l_);
  rec.dphi_l = pack(dphi_l_);
  return rec;
}

SurfaceRecord SurfaceRecorder::take() { return snapshot(); }

void SurfaceRecorder::seed(const SurfaceRecord& rec, long calls) {
  if (!t_.empty()) throw std::runtime_error("surface: seed into a used recorder");
  if (rec.n_orbitals != n_orbitals_ || rec.x_surface != x_surface_)
    throw std::invalid_argument("surface: seed record does not match recorder");
  const int n = rec.n_samples();
  t_.assign(rec.t.data(), rec.t.data() + n);
  a_.assign(rec.a.data(), rec.a.data() + n);
  alpha_.assign(rec.alpha.data(), rec.alpha.data() + n);
  phi_r_.reserve(static_cast<size_t>(n) * n_orbitals_);
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < n_orbitals_; ++i) {
      phi_r_.push_back(rec.phi_r(s, i));
      dphi_r_.push_back(rec.dphi_r(s, i));
      phi_l_.push_back(rec.phi_l(s, i));
      dphi_l_.push_back(rec.dphi_l(s, i));
    }
  calls_ = calls;
}

Eigen::ArrayXd MomentumGrid::values() const {
  if (!(dk > 0.0) || !(k_max > k_min))
    throw std::invalid_argument("momentum grid: need k_max > k_min and dk > 0");
  const int n = static_cast<int>(std::lround((k_max - k_min) / dk)) + 1;
  return Eigen::ArrayXd::LinSpaced(n, k_min, k_min + dk * (n - 1));
}

namespace {

struct WindowSlice {
  int begin = 0;
  int length = 0;
  Eigen::ArrayXd weight;  // window value times trapezoid weight
};

WindowSlice make_slice(const SurfaceRecord& rec, const TimeWindow& w) {
  WindowSlice s;
  int j0 = 0, j1 = rec.n_samples() - 1;
  if (w.gaussian) {
    if (!(w.sigma > 0.0)) throw std::invalid_argument("window: sigma must be positive");
    const double lo = w.center - w.truncation * w.sigma;
    const double hi = w.center + w.truncation * w.sigma;
    while (j0 < j1 && rec.t[j0] < lo) ++j0;
    while (j1 > j0 && rec.t[j1] > hi) --j1;
  }
  s.begin = j0;
  s.length = j1 - j0 + 1;
  if (s.length < 2) throw std::invalid_argument("window: covers fewer than two samples");
  s.weight = Eigen::ArrayXd::Constant(s.length, rec.dt);
  s.weight[0] *= 0.5;
  s.weight[s.length - 1] *= 0.5;
  if (w.gaussian) {
    const auto ts = rec.t.segment(s.begin, s.length);
    s.weight *= (-(ts - w.center).square() / (2.0 * w.sigma * w.sigma)).exp();
  }
  return s;
}

}  // namespace

Eigen::ArrayXXcd ionization_amplitudes(const SurfaceRecord& rec,
                                       const Eigen::ArrayXd& k,
                                       const TimeWindow& window) {
  const WindowSlice slice = make_slice(rec, window);
  const int nk = static_cast<int>(k.size());
  const int no = rec.n_orbitals;
  const int ns = slice.length;

  const Eigen::ArrayXd t = rec.t.segment(slice.begin, ns);
  const Eigen::ArrayXd a = rec.a.segment(slice.begin, ns);
  const Eigen::ArrayXd alpha = rec.alpha.segment(slice.begin, ns);

  // Weighted copies of the surface series; the k loop then only attaches
  // Volkov phases and contracts over time.
  auto weighted = [&](const Eigen::ArrayXXcd& src) {
    Eigen::MatrixXcd m(ns, rec.n_orbitals);
    for (int i = 0; i < rec.n_orbitals; ++i)
      m.col(i) = (src.col(i).segment(slice.begin, ns) * slice.weight).matrix();
    return m;
  };
  // Parts of the surface integrand: (k/2 + A) phi - (i/2) phi'.
  const Eigen::MatrixXcd wphi_r = weighted(rec.phi_r);
  const Eigen::MatrixXcd wphi_l = weighted(rec.phi_l);
  Eigen::MatrixXcd wrest_r = weighted(rec.dphi_r);
  Eigen::MatrixXcd wrest_l = weighted(rec.dphi_l);
  for (int i = 0; i < no; ++i) {
    wrest_r.col(i) = (a * wphi_r.col(i).array()).matrix() - 0.5 * I * wrest_r.col(i);
    wrest_l.col(i) = (a * wphi_l.col(i).array()).matrix() - 0.5 * I * wrest_l.col(i);
  }

  const double norm = 1.0 / std::sqrt(2.0 * M_PI);
  Eigen::ArrayXXcd b(nk, no);
  Eigen::ArrayXcd volkov(ns);
  for (int ik = 0; ik < nk; ++ik) {
    const double kk = k[ik];
    const Eigen::ArrayXd base = 0.5 * kk * kk * t + kk * alpha;
    // Right surface, outgoing flux counted positive.
    volkov = ((base - kk * rec.x_surface) * I).exp();
    Eigen::VectorXcd br = 0.5 * kk * (wphi_r.transpose() * volkov.matrix()) +
                          wrest_r.transpose() * volkov.matrix();
    // Left surface enters with the opposite orientation.
    volkov = ((base + kk * rec.x_surface) * I).exp();
    Eigen::VectorXcd bl = 0.5 * kk * (wphi_l.transpose() * volkov.matrix()) +
                          wrest_l.transpose() * volkov.matrix();
    b.row(ik) = (norm * (br - bl)).array().transpose();
  }
  return b;
}

Eigen::ArrayXd photoelectron_spectrum(const SurfaceRecord& rec,
                                      const Eigen::ArrayXd& k,
                                      const TimeWindow& window) {
  return ionization_amplitudes(rec, k, window).abs2().rowwise().sum();
}

Eigen::ArrayXXd gabor_map(const SurfaceRecord& rec, const Eigen::ArrayXd& k,
                          const Eigen::ArrayXd& centers, double sigma) {
  Eigen::ArrayXXd map(centers.size(), k.size());
  for (int g = 0; g < centers.size(); ++g)
    map.row(g) = photoelectron_spectrum(rec, k, TimeWindow::gauss(centers[g], sigma))
                     .transpose();
  return map;
}

EnergySpectrum energy_spectrum(const Eigen::ArrayXd& k, const Eigen::ArrayXd& y) {
  const int n = static_cast<int>(k.size());
  if (y.size() != n) throw std::invalid_argument("energy spectrum: size mismatch");
  if (n % 2 == 0 || std::abs(k[0] + k[n - 1]) > 1e-9 * std::abs(k[n - 1]))
    throw std::invalid_argument("energy spectrum: momentum grid not symmetric");
  const int c = (n - 1) / 2;
  EnergySpectrum out;
  out.energy.resize(c + 1);
  out.yield.resize(c + 1);
  for (int i = 0; i <= c; ++i) {
    out.energy[i] = 0.5 * k[c + i] * k[c + i];
    out.yield[i] = y[c + i] + (i > 0 ? y[c - i] : 0.0);
  }
  return out;
}

}  // namespace tdks
