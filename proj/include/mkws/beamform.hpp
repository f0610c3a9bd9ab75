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

#ifndef MKWS_BEAMFORM_HPP
#define MKWS_BEAMFORM_HPP

#include <vector>

#include "mkws/clip.hpp"
#include "mkws/geometry.hpp"

namespace mkws {

// Six delay-and-sum beams covering 360 degrees in 60 degree steps.
struct BeamSet {
  std::vector<double> steering_azimuths_deg;
  // delays[b][m] in seconds; beam b advances channel m by delays[b][m]
  std::vector<std::vector<double>> delays_s;
  int sample_rate = 16000;
  int num_mics = 7;

  static BeamSet ForGeometry(const ArrayGeometry& geometry,
                             std::vector<double> azimuths_deg = {0, 60, 120, 180, 240, 300});
};

// beam b = (1/M) sum_m delay(channel_m, -tau_m(theta_b)).
std::vector<std::vector<float>> Beamform(const MultichannelClip& clip, const BeamSet& beams);

std::vector<float> BeamformOne(const MultichannelClip& clip, const BeamSet& beams, int beam);

}  // namespace mkws

#endif  // MKWS_BEAMFORM_HPP
