// Copyright 2026 The mkws Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MKWS_ANC_HPP
#define MKWS_ANC_HPP

#include <vector>

#include "mkws/clip.hpp"

namespace mkws {

// 3-microphone adaptive noise canceller. Primary = center mic delayed by
// taps/2; references = two ring-minus-center difference channels, which
// null the look-independent direct path and capture directional noise.
// NLMS adapts continuously, but the coefficients APPLIED at time t are a
// snapshot at least freeze_seconds old, so only sounds recorded more than
// one second before the present define the noise model.
struct AncConfig {
  int primary_mic = 0;
  int ref_mic_a = 1;
  int ref_mic_b = 4;  // diametric pair by default
  int taps = 128;
  double step_size = 0.05;      // NLMS mu
  double regularization = 1e-6; // NLMS epsilon
  double freeze_seconds = 1.0;
  int snapshot_hop = 160;       // coefficient snapshot granularity, samples
  double min_clip_seconds = 1.2;
};

struct AncResult {
  std::vector<float> samples;
  bool passthrough = false;  // clip too short for adaptation history
  // Applied (frozen) coefficient snapshot at the final sample, 2 x taps.
  std::vector<double> final_applied_coeffs;
};

AncResult AncProcess(const MultichannelClip& clip, const AncConfig& config = {});

// Streaming form; one instance per audio stream.
class AncProcessor {
 public:
  explicit AncProcessor(const AncConfig& config, int sample_rate);

  // Consumes one multichannel sample frame (one sample per mic), returns
  // the cancelled output sample.
  float Step(const float* mic_samples, int num_mics);

  const std::vector<double>& applied_coeffs() const { return applied_; }

 private:
  void MaybeSnapshot();

  AncConfig cfg_;
  int64_t t_ = 0;
  int64_t freeze_samples_ = 0;
  int primary_delay_ = 0;
  std::vector<double> ref_hist_;      // 2 x taps ring, lag-major per ref
  std::vector<double> primary_hist_;  // primary delay line
  int hist_pos_ = 0;
  double ref_norm_ = 0.0;             // running sum of squares over both windows
  std::vector<double> weights_;       // adapting 2 x taps
  std::vector<double> applied_;       // frozen snapshot in use
  std::vector<std::vector<double>> snapshots_;  // ring of past snapshots
  int64_t snapshot_count_ = 0;
  int64_t applied_id_ = -1;
};

}  // namespace mkws

#endif  // MKWS_ANC_HPP
