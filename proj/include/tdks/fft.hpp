#pragma once

#include <unsupported/Eigen/FFT>

#include "tdks/types.hpp"

namespace tdks {

inline int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Thin wrappers around Eigen's FFT.  A fresh plan object per call keeps these
// re-entrant; plan setup is cheap next to the transforms we run.

inline Eigen::VectorXcd fft_forward(const Eigen::VectorXcd& in) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd out;
  fft.fwd(out, in);
  return out;
}

inline Eigen::VectorXcd fft_inverse(const Eigen::VectorXcd& in) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd out;
  fft.inv(out, in);
  return out;
}

inline Eigen::VectorXcd fft_forward_real(const Eigen::VectorXd& in) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd out;
  fft.fwd(out, in);
  return out;
}

}  // namespace tdks
