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

#ifndef MKWS_FEATURES_HPP
#define MKWS_FEATURES_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mkws/anc.hpp"
#include "mkws/beamform.hpp"
#include "mkws/clip.hpp"
#include "mkws/fft.hpp"

namespace mkws {

// Per-frame log-Mel filterbank energies, frames x dim, float32 storage.
struct FeatureMatrix {
  int frames = 0;
  int dim = 40;
  std::vector<float> data;  // row-major
  std::string channel_tag;
  int frame_ms = 25;
  int hop_ms = 10;

  float at(int t, int d) const { return data[static_cast<size_t>(t) * dim + d]; }
  const float* row(int t) const { return data.data() + static_cast<size_t>(t) * dim; }
};

struct MelOptions {
  int sample_rate = 16000;
  int frame_len = 400;  // 25 ms
  int hop = 160;        // 10 ms
  int fft_size = 512;
  int num_bins = 40;
  double low_freq = 125.0;
  double high_freq = 7500.0;
  double log_floor = 1e-7;
};

// Hann window, 512-point FFT, 40 triangular Mel filters, natural log with
// floor. Pure and shareable across threads once constructed.
class MelExtractor {
 public:
  explicit MelExtractor(const MelOptions& options = {});

  FeatureMatrix Compute(std::span<const float> samples, std::string channel_tag) const;

  int NumFrames(int64_t num_samples) const;
  const MelOptions& options() const { return opts_; }

 private:
  MelOptions opts_;
  Fft fft_;
  std::vector<double> window_;
  // filter f covers fft bins [offsets_[f], offsets_[f] + weights_[f].size())
  std::vector<int> offsets_;
  std::vector<std::vector<double>> weights_;
};

FeatureMatrix LogMel(std::span<const float> samples, std::string channel_tag = "");

enum class ChannelMode { kOmni, kOmniAnc, kOmniBf6 };

ChannelMode ChannelModeFromName(const std::string& name);
std::string ChannelModeName(ChannelMode mode);
int ChannelCount(ChannelMode mode);

// Ordered feature bank for one clip: [omni], [omni, anc] or
// [omni, bf_0 .. bf_300]. All matrices share the same frame count.
std::vector<FeatureMatrix> MakeChannelBank(const MultichannelClip& clip, ChannelMode mode,
                                           const MelExtractor& extractor,
                                           const AncConfig& anc_config = {});

// Feature dump: magic "MKWSFEAT", u32 frames, u32 dim, then frames*dim
// little-endian float32.
void WriteFeatureDump(const FeatureMatrix& features, const std::string& path);
FeatureMatrix ReadFeatureDump(const std::string& path);

}  // namespace mkws

#endif  // MKWS_FEATURES_HPP
