// src/signal.cc

// Copyright 2026  Spoofkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "spoofkit/signal.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace spoofkit {

Waveform preemphasize(const Waveform &x, double alpha) {
  if (x.samples.size() == 0)
    throw std::invalid_argument("preemphasize: empty signal");
  if (alpha < 0.0 || alpha >= 1.0)
    throw std::invalid_argument("preemphasize: alpha must be in [0, 1)");
  Waveform y{Vector(x.samples.size()), x.sample_rate};
  y.samples[0] = x.samples[0];
  for (Eigen::Index t = 1; t < x.samples.size(); ++t)
    y.samples[t] = x.samples[t] - alpha * x.samples[t - 1];
  return y;
}

FrameMatrix frame_signal(const Waveform &x, double frame_ms, double hop_ms) {
  if (frame_ms <= 0.0 || hop_ms <= 0.0)
    throw std::invalid_argument("frame_signal: frame_ms and hop_ms must be positive");
  if (x.sample_rate <= 0)
    throw std::invalid_argument("frame_signal: sample rate must be positive");
  const int frame_len = static_cast<int>(std::lround(frame_ms * x.sample_rate / 1000.0));
  const int hop = static_cast<int>(std::lround(hop_ms * x.sample_rate / 1000.0));
  if (frame_len < 1 || hop < 1)
    throw std::invalid_argument("frame_signal: frame or hop rounds to zero samples");
  const Eigen::Index n = x.samples.size();
  if (n < frame_len)
    throw std::invalid_argument("frame_signal: signal shorter than one frame");
  const Eigen::Index n_frames = (n - frame_len) / hop + 1;
  FrameMatrix out{Matrix(n_frames, frame_len), frame_len, hop};
  for (Eigen::Index f = 0; f < n_frames; ++f)
    out.frames.row(f) = x.samples.segment(f * hop, frame_len);
  return out;
}

Vector hamming_window(int length) {
  if (length < 2) throw std::invalid_argument("hamming_window: length must be >= 2");
  Vector w(length);
  for (int n = 0; n < length; ++n)
    w[n] = 0.54 - 0.46 * std::cos(2.0 * M_PI * n / (length - 1));
  return w;
}

Vector power_spectrum(const Vector &frame, int nfft) {
  if (nfft < 1 || (nfft & (nfft - 1)) != 0)
    throw std::invalid_argument("power_spectrum: nfft must be a power of two");
  if (frame.size() > nfft)
    throw std::invalid_argument("power_spectrum: frame longer than nfft");
  std::vector<double> padded(nfft, 0.0);
  for (Eigen::Index i = 0; i < frame.size(); ++i) padded[i] = frame[i];
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spec;
  fft.fwd(spec, padded);
  Vector p(nfft / 2 + 1);
  for (int k = 0; k <= nfft / 2; ++k) p[k] = std::norm(spec[k]) / nfft;
  return p;
}

Vector dct2(const Vector &v, int n_out) {
  const int n = static_cast<int>(v.size());
  if (n == 0) throw std::invalid_argument("dct2: empty input");
  if (n_out < 1 || n_out > n)
    throw std::invalid_argument("dct2: n_out must be in [1, len(v)]");
  Vector out(n_out);
  const double s0 = std::sqrt(1.0 / n), sk = std::sqrt(2.0 / n);
  for (int k = 0; k < n_out; ++k) {
    double acc = 0.0;
    for (int t = 0; t < n; ++t)
      acc += v[t] * std::cos(M_PI * k * (2.0 * t + 1.0) / (2.0 * n));
    out[k] = (k == 0 ? s0 : sk) * acc;
  }
  return out;
}

FeatureMatrix delta(const FeatureMatrix &features) {
  if (features.rows() < 1) throw std::invalid_argument("delta: empty feature matrix");
  FeatureMatrix d = FeatureMatrix::Zero(features.rows(), features.cols());
  for (Eigen::Index k = 1; k < features.rows(); ++k)
    d.row(k) = features.row(k) - features.row(k - 1);
  return d;
}

FeatureMatrix cmvn(const FeatureMatrix &features) {
  if (features.rows() < 2)
    throw std::invalid_argument("cmvn: need at least two frames");
  const double n = static_cast<double>(features.rows());
  FeatureMatrix out(features.rows(), features.cols());
  for (Eigen::Index d = 0; d < features.cols(); ++d) {
    const double mean = features.col(d).mean();
    const double var = (features.col(d).array() - mean).square().sum() / n;
    if (var == 0.0) {
      out.col(d).setZero();
    } else {
      out.col(d) = (features.col(d).array() - mean) / std::sqrt(var);
    }
  }
  return out;
}

std::vector<bool> energy_vad(const FrameMatrix &frames, double threshold_db) {
  const Eigen::Index n_frames = frames.frames.rows();
  Vector log_e(n_frames);
  for (Eigen::Index f = 0; f < n_frames; ++f)
    log_e[f] = std::log(frames.frames.row(f).squaredNorm() + kLogFloor);
  const double cutoff = log_e.maxCoeff() - threshold_db / 10.0 * std::log(10.0);
  std::vector<bool> keep(n_frames);
  for (Eigen::Index f = 0; f < n_frames; ++f) keep[f] = log_e[f] >= cutoff;
  return keep;
}

Vector teager_energy(const Vector &frame) {
  const Eigen::Index n = frame.size();
  if (n < 3) throw std::invalid_argument("teager_energy: frame shorter than 3 samples");
  Vector psi(n);
  for (Eigen::Index t = 1; t + 1 < n; ++t)
    psi[t] = frame[t] * frame[t] - frame[t - 1] * frame[t + 1];
  psi[0] = psi[1];
  psi[n - 1] = psi[n - 2];
  return psi;
}

}  // namespace spoofkit
