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

#include "mkws/anc.hpp"

#include <cmath>

#include "mkws/common.hpp"

namespace mkws {

AncProcessor::AncProcessor(const AncConfig& config, int sample_rate) : cfg_(config) {
  if (cfg_.taps < 2) throw ConfigError("anc: taps must be >= 2");
  freeze_samples_ = static_cast<int64_t>(cfg_.freeze_seconds * sample_rate);
  primary_delay_ = cfg_.taps / 2;
  ref_hist_.assign(2 * static_cast<size_t>(cfg_.taps), 0.0);
  primary_hist_.assign(primary_delay_ + 1, 0.0);
  weights_.assign(2 * static_cast<size_t>(cfg_.taps), 0.0);
  applied_.assign(2 * static_cast<size_t>(cfg_.taps), 0.0);
  int ring = static_cast<int>(freeze_samples_ / cfg_.snapshot_hop) + 4;
  snapshots_.assign(ring, std::vector<double>(2 * static_cast<size_t>(cfg_.taps), 0.0));
}

void AncProcessor::MaybeSnapshot() {
  // Snapshot m covers samples [0, m*hop); it may be applied once every
  // sample it saw is at least freeze_samples old.
  if (t_ % cfg_.snapshot_hop == 0 && t_ > 0) {
    int64_t m = t_ / cfg_.snapshot_hop;
    snapshots_[m % snapshots_.size()] = weights_;
    snapshot_count_ = m;
  }
  int64_t m_apply = (t_ - freeze_samples_ + 1);
  m_apply = m_apply > 0 ? m_apply / cfg_.snapshot_hop : 0;
  if (m_apply > 0 && m_apply <= snapshot_count_ && m_apply != applied_id_) {
    applied_ = snapshots_[m_apply % snapshots_.size()];
    applied_id_ = m_apply;
  }
}

float AncProcessor::Step(const float* mic, int num_mics) {
  if (num_mics <= cfg_.ref_mic_a || num_mics <= cfg_.ref_mic_b) {
    throw ConfigError("anc: reference mic index out of range");
  }
  MaybeSnapshot();

  const int taps = cfg_.taps;
  double primary = mic[cfg_.primary_mic];
  double ra = static_cast<double>(mic[cfg_.ref_mic_a]) - primary;
  double rb = static_cast<double>(mic[cfg_.ref_mic_b]) - primary;

  int pos = hist_pos_;
  double* ha = ref_hist_.data();
  double* hb = ref_hist_.data() + taps;
  ref_norm_ -= ha[pos] * ha[pos] + hb[pos] * hb[pos];
  ha[pos] = ra;
  hb[pos] = rb;
  ref_norm_ += ra * ra + rb * rb;

  int pd = static_cast<int>(t_ % primary_hist_.size());
  double d_delayed = primary_hist_[pd];  // primary(t - taps/2)
  primary_hist_[pd] = primary;

  double y_frozen = 0.0, y_adapt = 0.0;
  const double* wa = applied_.data();
  const double* wb = applied_.data() + taps;
  double* va = weights_.data();
  double* vb = weights_.data() + taps;
  int idx = pos;
  for (int l = 0; l < taps; ++l) {
    double xa = ha[idx], xb = hb[idx];
    y_frozen += wa[l] * xa + wb[l] * xb;
    y_adapt += va[l] * xa + vb[l] * xb;
    idx = idx == 0 ? taps - 1 : idx - 1;
  }

  double e_frozen = d_delayed - y_frozen;
  double e_adapt = d_delayed - y_adapt;
  double g = cfg_.step_size * e_adapt / (cfg_.regularization + ref_norm_);
  idx = pos;
  for (int l = 0; l < taps; ++l) {
    va[l] += g * ha[idx];
    vb[l] += g * hb[idx];
    idx = idx == 0 ? taps - 1 : idx - 1;
  }

  hist_pos_ = pos + 1 == taps ? 0 : pos + 1;
  ++t_;
  return static_cast<float>(e_frozen);
}

AncResult AncProcess(const MultichannelClip& clip, const AncConfig& config) {
  if (clip.num_channels() < 3) throw ConfigError("anc: needs at least 3 channels");
  AncResult result;
  if (clip.duration_s() < config.min_clip_seconds) {
    result.samples = clip.channels[config.primary_mic];
    result.passthrough = true;
    result.final_applied_coeffs.assign(2 * static_cast<size_t>(config.taps), 0.0);
    return result;
  }

  AncProcessor proc(config, clip.sample_rate);
  const int64_t n = clip.num_samples();
  const int num_mics = clip.num_channels();
  result.samples.resize(n);
  std::vector<float> frame(num_mics);
  for (int64_t i = 0; i < n; ++i) {
    for (int m = 0; m < num_mics; ++m) frame[m] = clip.channels[m][i];
    result.samples[i] = proc.Step(frame.data(), num_mics);
  }
  result.final_applied_coeffs = proc.applied_coeffs();
  return result;
}

}  // namespace mkws
