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

#ifndef MKWS_WAV_HPP
#define MKWS_WAV_HPP

#include <string>
#include <vector>

namespace mkws {

// PCM 16-bit little-endian, interleaved channels.
void WriteWav(const std::string& path,
              const std::vector<std::vector<float>>& channels, int sample_rate);

struct WavData {
  std::vector<std::vector<float>> channels;
  int sample_rate = 0;
};

WavData ReadWav(const std::string& path);

}  // namespace mkws

#endif  // MKWS_WAV_HPP
