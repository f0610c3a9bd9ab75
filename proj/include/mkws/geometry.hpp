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

#ifndef MKWS_GEOMETRY_HPP
#define MKWS_GEOMETRY_HPP

#include <array>
#include <span>
#include <vector>

#include "mkws/common.hpp"

namespace mkws {

// 7-microphone planar array: mic 0 at the origin (omni), mics 1..6 on a
// 4.2 cm circle with 60 degree spacing.
struct ArrayGeometry {
  std::vector<std::array<double, 2>> mic_positions;  // meters
  int sample_rate = 16000;
  double speed_of_sound = 343.0;

  static ArrayGeometry Circular7(double radius_m = 0.042, int sample_rate = 16000,
                                 double speed_of_sound = 343.0);

  int num_mics() const { return static_cast<int>(mic_positions.size()); }
  double ring_radius() const;

  // Plane-wave arrival delay of mic m relative to the array center for a
  // far-field source at the given azimuth: tau_m = -(r_m . u) / c.
  // Negative means the wave reaches the mic before the center.
  double SteeringDelaySeconds(int mic, double azimuth_deg) const;

  // Throws ConfigError if the layout violates the 7-mic circular invariants.
  void Validate() const;
};

// A far-field point source to render onto the array.
struct SourceSpec {
  double azimuth_deg = 0.0;
  double distance_m = 2.0;
  double level_db_spl = 60.0;  // calibrated RMS target, see SplToRms
  std::vector<float> waveform;
};

// Precomputed 32-tap Hann-windowed-sinc fractional delay. Max inter-mic
// delay is ~2 samples at 16 kHz, so sub-sample accuracy matters.
struct SincDelayKernel {
  int offset = 0;  // first tap reads x[n + offset]
  std::array<double, 32> coeff{};
};

SincDelayKernel MakeDelayKernel(double delay_samples);

// acc[n] += gain * x(n - delay); samples outside x are treated as zero.
void AccumulateDelayed(std::span<const float> x, const SincDelayKernel& kernel,
                       double gain, std::span<double> acc);

std::vector<float> ApplyDelay(std::span<const float> x, double delay_samples);

}  // namespace mkws

#endif  // MKWS_GEOMETRY_HPP
