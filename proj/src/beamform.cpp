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

#include "mkws/beamform.hpp"

namespace mkws {

BeamSet BeamSet::ForGeometry(const ArrayGeometry& geometry,
                             std::vector<double> azimuths_deg) {
  BeamSet set;
  set.sample_rate = geometry.sample_rate;
  set.num_mics = geometry.num_mics();
  set.steering_azimuths_deg = std::move(azimuths_deg);
  for (double az : set.steering_azimuths_deg) {
    std::vector<double> d(geometry.num_mics());
    for (int m = 0; m < geometry.num_mics(); ++m) {
      d[m] = geometry.SteeringDelaySeconds(m, az);
    }
    set.delays_s.push_back(std::move(d));
  }
  return set;
}

std::vector<float> BeamformOne(const MultichannelClip& clip, const BeamSet& beams, int beam) {
  if (clip.num_channels() != beams.num_mics || clip.sample_rate != beams.sample_rate) {
    throw ConfigError("beamform: clip does not match the beam set geometry");
  }
  const int64_t n = clip.num_samples();
  std::vector<double> acc(n, 0.0);
  const double gain = 1.0 / beams.num_mics;
  for (int m = 0; m < beams.num_mics; ++m) {
    // Undo the steering delay so a plane wave from theta_b aligns.
    double delay_samples = -beams.delays_s[beam][m] * beams.sample_rate;
    AccumulateDelayed(clip.channels[m], MakeDelayKernel(delay_samples), gain, acc);
  }
  std::vector<float> out(n);
  for (int64_t i = 0; i < n; ++i) out[i] = static_cast<float>(acc[i]);
  return out;
}

std::vector<std::vector<float>> Beamform(const MultichannelClip& clip, const BeamSet& beams) {
  std::vector<std::vector<float>> out;
  out.reserve(beams.steering_azimuths_deg.size());
  for (size_t b = 0; b < beams.steering_azimuths_deg.size(); ++b) {
    out.push_back(BeamformOne(clip, beams, static_cast<int>(b)));
  }
  return out;
}

}  // namespace mkws
