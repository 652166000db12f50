// spoofkit/signal.hpp

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

#ifndef SPOOFKIT_SIGNAL_HPP_
#define SPOOFKIT_SIGNAL_HPP_

#include <vector>

#include "spoofkit/types.hpp"

namespace spoofkit {

/// First-order pre-emphasis filter y[t] = x[t] - alpha*x[t-1], with
/// y[0] = x[0].  Requires 0 <= alpha < 1 and a non-empty signal.
Waveform preemphasize(const Waveform &x, double alpha);

/// Splits a signal into frames of frame_ms with a shift of hop_ms, both
/// rounded to whole samples.  A trailing partial frame is dropped.  The
/// signal must be at least one frame long.
FrameMatrix frame_signal(const Waveform &x, double frame_ms, double hop_ms);

/// Hamming window w[n] = 0.54 - 0.46*cos(2*pi*n/(L-1)), L >= 2.
Vector hamming_window(int length);

/// P[k] = |DFT_nfft(frame)[k]|^2 / nfft for k = 0..nfft/2.  The frame is
/// zero-padded to nfft, which must be a power of two >= the frame length.
Vector power_spectrum(const Vector &frame, int nfft);

/// Orthonormal type-II DCT; the first n_out coefficients are returned.
Vector dct2(const Vector &v, int n_out);

/// First-difference dynamic features: row 0 is zero, row k is
/// f_k - f_{k-1}.  Apply twice for acceleration coefficients.
FeatureMatrix delta(const FeatureMatrix &features);

/// Per-dimension mean/variance normalization over the utterance
/// (population variance).  Zero-variance dimensions map to zeros.
/// Requires at least two frames.
FeatureMatrix cmvn(const FeatureMatrix &features);

/// Energy-based voice activity mask: a frame is kept iff its log energy
/// is within threshold_db of the loudest frame.  At least one frame is
/// always kept.
std::vector<bool> energy_vad(const FrameMatrix &frames, double threshold_db);

/// Teager-Kaiser energy Psi[t] = s[t]^2 - s[t-1]*s[t+1] for interior t;
/// endpoints copy their nearest interior value.  Requires length >= 3.
Vector teager_energy(const Vector &frame);

}  // namespace spoofkit

#endif  // SPOOFKIT_SIGNAL_HPP_
