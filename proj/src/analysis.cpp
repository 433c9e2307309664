#include "tdks/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace tdks {

namespace {

// Vertex of the parabola through three equally indexed samples; dx is the
// local sample spacing.
void refine_parabolic(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, Peak& p) {
  const int j = p.index;
  if (j < 1 || j > static_cast<int>(y.size()) - 2) return;
  const double denom = y[j - 1] - 2.0 * y[j] + y[j + 1];
  if (denom >= 0.0) return;  // not locally concave, keep the grid point
  const double shift = 0.5 * (y[j - 1] - y[j + 1]) / denom;
  const double dx = 0.5 * (x[j + 1] - x[j - 1]);
  p.position = x[j] + shift * dx;
  p.height = y[j] - 0.25 * (y[j - 1] - y[j + 1]) * shift;
}

double half_crossing(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, int from,
                     int direction, double half) {
  for (int j = from; j + direction >= 0 && j + direction < y.size(); j += direction) {
    const int jn = j + direction;
    if (y[jn] <= half) {
      const double f = (y[j] - half) / (y[j] - y[jn]);
      return x[j] + f * (x[jn] - x[j]);
    }
    if (y[jn] > y[j]) break;  // climbing into the next peak
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

std::vector<Peak> find_peaks(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                             const PeakOptions& options) {
  const int n = static_cast<int>(y.size());
  if (x.size() != n) throw std::invalid_argument("peaks: size mismatch");
  std::vector<Peak> peaks;
  if (n < 3) return peaks;
  const double floor =
      std::max(options.min_height, options.min_rel_height * y.maxCoeff());
  for (int j = 1; j < n - 1; ++j) {
    if (!(y[j] > y[j - 1] && y[j] >= y[j + 1])) continue;
    if (y[j] < floor) continue;
    Peak p;
    p.index = j;
    p.position = x[j];
    p.height = y[j];
    refine_parabolic(x, y, p);
    const double half = 0.5 * p.height;
    const double left = half_crossing(x, y, j, -1, half);
    const double right = half_crossing(x, y, j, +1, half);
    p.fwhm = (std::isnan(left) || std::isnan(right)) ? 0.0 : right - left;
    peaks.push_back(p);
  }
  std::sort(peaks.begin(), peaks.end(),
            [](const Peak& a, const Peak& b) { return a.height > b.height; });
  return peaks;
}

Peak strongest_peak_in(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                       double lo, double hi) {
  for (const Peak& p : find_peaks(x, y))
    if (p.position >= lo && p.position <= hi) return p;
  return {};
}

double max_in_window(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, double lo,
                     double hi) {
  double best = 0.0;
  for (int j = 0; j < x.size(); ++j)
    if (x[j] >= lo && x[j] <= hi) best = std::max(best, y[j]);
  return best;
}

std::vector<LadderLine> photon_ladder(double eps, double omega, double e_max) {
  if (!(omega > 0.0)) throw std::invalid_argument("ladder: omega must be positive");
  std::vector<LadderLine> lines;
  int n = static_cast<int>(std::ceil(-eps / omega));
  if (n < 1) n = 1;                 // at least one photon absorbed
  if (eps + n * omega <= 0.0) ++n;  // land strictly in the continuum
  for (; eps + n * omega <= e_max; ++n) lines.push_back({n, eps + n * omega});
  return lines;
}

double window_yield(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, double lo,
                    double hi) {
  const int n = static_cast<int>(x.size());
  if (y.size() != n || n < 2) throw std::invalid_argument("yield: bad spectrum");
  if (!(hi > lo)) throw std::invalid_argument("yield: empty window");
  auto value_at = [&](double xv) {
    // x is monotone increasing; linear interpolation.
    int j = 1;
    while (j < n - 1 && x[j] < xv) ++j;
    const double f = (xv - x[j - 1]) / (x[j] - x[j - 1]);
    return y[j - 1] + f * (y[j] - y[j - 1]);
  };
  const double a = std::max(lo, x[0]);
  const double b = std::min(hi, x[n - 1]);
  if (!(b > a)) return 0.0;
  double acc = 0.0;
  double px = a, py = value_at(a);
  for (int j = 0; j < n; ++j) {
    if (x[j] <= a) continue;
    if (x[j] >= b) break;
    acc += 0.5 * (py + y[j]) * (x[j] - px);
    px = x[j];
    py = y[j];
  }
  acc += 0.5 * (py + value_at(b)) * (b - px);
  return acc;
}

SlopeFit log_log_fit(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("slope: need matching arrays with >= 2 points");
  if ((x <= 0.0).any() || (y <= 0.0).any())
    throw std::domain_error("slope: log scaling needs positive data");
  const Eigen::ArrayXd lx = x.log();
  const Eigen::ArrayXd ly = y.log();
  const double mx = lx.mean();
  const double my = ly.mean();
  SlopeFit fit;
  fit.slope = ((lx - mx) * (ly - my)).sum() / (lx - mx).square().sum();
  fit.intercept = my - fit.slope * mx;
  fit.rms_residual =
      std::sqrt((ly - fit.intercept - fit.slope * lx).square().mean());
  return fit;
}

double log_log_slope(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  return log_log_fit(x, y).slope;
}

}  // namespace tdks
