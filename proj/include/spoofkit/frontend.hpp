// spoofkit/frontend.hpp

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

#ifndef SPOOFKIT_FRONTEND_HPP_
#define SPOOFKIT_FRONTEND_HPP_

#include <string>
#include <vector>

#include "spoofkit/types.hpp"

namespace spoofkit {

double hz_to_mel(double hz);
double mel_to_hz(double mel);

/// Triangular mel filterbank over the half spectrum.  Row m rises from
/// bin_points[m] to a peak of exactly 1 at bin_points[m+1] and falls to
/// bin_points[m+2].
struct MelFilterbank {
  Matrix weights;               // n_filt x (nfft/2 + 1)
  std::vector<int> bin_points;  // n_filt + 2 DFT bin indices, increasing
  int n_filt = 0;
  int nfft = 0;
  double sample_rate = 0.0;
};

MelFilterbank mel_filterbank(int n_filt, int nfft, double sample_rate);

struct MfccConfig {
  double alpha = 0.97;
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  int nfft = 512;
  int n_filt = 20;
  int n_ceps = 20;
  bool use_vad = true;
  bool use_cmvn = true;
  bool dynamic_only = true;
  double vad_threshold_db = 40.0;
};

/// Cepstral features with coefficient 0 replaced by the frame log energy.
/// Output is [static | delta | delta-delta] (n_ceps each), or only the
/// dynamic parts when cfg.dynamic_only is set.
FeatureMatrix mfcc(const Waveform &x, const MfccConfig &cfg);

/// Full wavelet packet decomposition.  Leaves are in natural frequency
/// order; the frame is zero-padded to a multiple of 2^level so that the
/// periodic filtering stays orthonormal at every stage.
struct WptTree {
  std::vector<Vector> leaf_coeffs;  // 2^level leaves
  int level = 0;
  std::string wavelet_name;
};

WptTree wpt(const Vector &frame, const std::string &wavelet, int level);

struct PcaModel {
  Vector mean;         // input dim
  Matrix projection;   // k x input dim, orthonormal rows
  Vector eigenvalues;  // k, descending
};

/// Top-k eigenvectors of the population covariance of mean-centered X.
PcaModel pca_fit(const FeatureMatrix &X, int k);
FeatureMatrix pca_apply(const PcaModel &pca, const FeatureMatrix &X);

struct MwpcConfig {
  double alpha = 0.97;
  double frame_ms = 25.0;
  double hop_ms = 10.0;
  std::string wavelet = "db4";
  int level = 4;
  int n_filt = 20;
};

/// Triangular mel weights evaluated at the centers of n_subbands equal
/// subbands of [0, fs/2]; maps subband log energies to n_filt outputs.
Matrix wpt_mel_projection(int n_filt, int n_subbands, double sample_rate);

/// The MWPC pipeline up to but excluding PCA: pre-emphasis, framing,
/// windowing, Teager-Kaiser energy, WPT, per-leaf log energies, mel
/// projection.  Output is n_frames x n_filt; used to fit the PCA.
FeatureMatrix mwpc_subband_features(const Waveform &x, const MwpcConfig &cfg);

/// MWPC features: mwpc_subband_features followed by the given PCA.
FeatureMatrix mwpc(const Waveform &x, const PcaModel &pca, const MwpcConfig &cfg);

}  // namespace spoofkit

#endif  // SPOOFKIT_FRONTEND_HPP_
