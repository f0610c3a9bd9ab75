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

#ifndef MKWS_CLIP_HPP
#define MKWS_CLIP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mkws {

enum class ClipLabel { kNegative, kKeyword };

// Sample span [begin, end) of the keyword inside the clip.
struct KeywordSpan {
  int64_t begin = 0;
  int64_t end = 0;
};

struct ClipMetadata {
  double snr_db = 0.0;
  std::string noise_type;
  double keyword_azimuth_deg = 0.0;
  double noise_azimuth_deg = 0.0;
  uint64_t seed = 0;
  std::string warning;  // e.g. overlapping source azimuths
};

// Synchronized per-microphone sample streams. Channel 0 is the center
// (omni) microphone.
struct MultichannelClip {
  std::vector<std::vector<float>> channels;
  int sample_rate = 16000;
  ClipLabel label = ClipLabel::kNegative;
  KeywordSpan span;
  ClipMetadata meta;

  int num_channels() const { return static_cast<int>(channels.size()); }
  int64_t num_samples() const {
    return channels.empty() ? 0 : static_cast<int64_t>(channels[0].size());
  }
  double duration_s() const {
    return static_cast<double>(num_samples()) / sample_rate;
  }
};

}  // namespace mkws

#endif  // MKWS_CLIP_HPP
