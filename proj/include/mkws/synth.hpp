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

#ifndef MKWS_SYNTH_HPP
#define MKWS_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mkws {

// Pitch registers for the synthetic keyword (low/mid/high voices).
enum class VoicePreset { kLow, kMid, kHigh };

VoicePreset VoicePresetFromName(const std::string& name);
std::string VoicePresetName(VoicePreset preset);

// Deterministic formant-like keyword: three voiced segments with fixed
// formant targets, preset-dependent pitch, and small seeded jitter.
// Peak-normalized mono at 16 kHz.
std::vector<float> SynthKeyword(VoicePreset preset, uint64_t seed, int sample_rate = 16000);

// Named noise generators; unknown names throw ConfigError.
// white, pink, babble, am_tone, kitchen, street, vacuum, tv
std::vector<float> SynthNoise(const std::string& noise_type, double duration_s,
                              uint64_t seed, int sample_rate = 16000);

// The six lab noise types.
const std::vector<std::string>& DefaultNoiseTypes();

}  // namespace mkws

#endif  // MKWS_SYNTH_HPP
