// spoofkit/types.hpp

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

#ifndef SPOOFKIT_TYPES_HPP_
#define SPOOFKIT_TYPES_HPP_

#include <Eigen/Core>

namespace spoofkit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Mono audio at a fixed sample rate.  Samples are dimensionless
/// amplitudes, nominally in [-1, 1].
struct Waveform {
  Vector samples;
  int sample_rate = 0;
};

/// Frames of a signal, one per row.
struct FrameMatrix {
  Matrix frames;      // n_frames x frame_len
  int frame_len = 0;  // samples
  int hop = 0;        // samples
};

/// Features are n_frames x dim throughout.
using FeatureMatrix = Matrix;

// Additive floor used inside every log-energy computation.
constexpr double kLogFloor = 1e-10;

}  // namespace spoofkit

#endif  // SPOOFKIT_TYPES_HPP_
