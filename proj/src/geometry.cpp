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

#include "mkws/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace mkws {

ArrayGeometry ArrayGeometry::Circular7(double radius_m, int sample_rate,
                                       double speed_of_sound) {
  ArrayGeometry g;
  g.sample_rate = sample_rate;
  g.speed_of_sound = speed_of_sound;
  g.mic_positions.push_back({0.0, 0.0});
  for (int k = 0; k < 6; ++k) {
    double ang = kPi / 180.0 * (60.0 * k);
    g.mic_positions.push_back({radius_m * std::cos(ang), radius_m * std::sin(ang)});
  }
  return g;
}

double ArrayGeometry::ring_radius() const {
  double r = 0.0;
  for (int m = 1; m < num_mics(); ++m) {
    r = std::max(r, std::hypot(mic_positions[m][0], mic_positions[m][1]));
  }
  return r;
}

double ArrayGeometry::SteeringDelaySeconds(int mic, double azimuth_deg) const {
  double a = azimuth_deg * kPi / 180.0;
  double ux = std::cos(a), uy = std::sin(a);
  const auto& p = mic_positions[mic];
  return -(p[0] * ux + p[1] * uy) / speed_of_sound;
}

void ArrayGeometry::Validate() const {
  if (num_mics() != 7) throw ConfigError("geometry: expected 7 microphones");
  if (std::hypot(mic_positions[0][0], mic_positions[0][1]) > 1e-9) {
    throw ConfigError("geometry: mic 0 must sit at the origin");
  }
  double radius = std::hypot(mic_positions[1][0], mic_positions[1][1]);
  for (int m = 1; m < 7; ++m) {
    double r = std::hypot(mic_positions[m][0], mic_positions[m][1]);
    if (std::abs(r - radius) > 1e-9) {
      throw ConfigError("geometry: ring mics must share one radius");
    }
  }
  for (int m = 1; m < 7; ++m) {
    int next = (m == 6) ? 1 : m + 1;
    double a0 = std::atan2(mic_positions[m][1], mic_positions[m][0]);
    double a1 = std::atan2(mic_positions[next][1], mic_positions[next][0]);
    double step = std::fmod(a1 - a0 + 4.0 * kPi, 2.0 * kPi);
    if (std::abs(step - kPi / 3.0) > 1e-9) {
      throw ConfigError("geometry: ring mics must be 60 degrees apart");
    }
  }
}

SincDelayKernel MakeDelayKernel(double delay_samples) {
  SincDelayKernel k;
  double q = std::floor(-delay_samples);
  double frac = -delay_samples - q;  // in [0, 1)
  constexpr int kHalf = 16;
  k.offset = static_cast<int>(q) - (kHalf - 1);
  double sin_pf = std::sin(kPi * frac);
  for (int j = 0; j < 32; ++j) {
    // tap j reads x[n + offset + j]; distance from the interpolation point
    double u = frac + (kHalf - 1) - j;
    double s;
    if (u == 0.0) {
      s = 1.0;
    } else {
      double parity = (((kHalf - 1 - j) % 2) == 0) ? 1.0 : -1.0;
      s = parity * sin_pf / (kPi * u);
    }
    double w = 0.5 * (1.0 + std::cos(kPi * u / kHalf));
    k.coeff[j] = s * w;
  }
  // Exact passthrough for integer delays.
  if (frac == 0.0) {
    k.coeff.fill(0.0);
    k.coeff[kHalf - 1] = 1.0;
  }
  return k;
}

void AccumulateDelayed(std::span<const float> x, const SincDelayKernel& kernel,
                       double gain, std::span<double> acc) {
  const int64_t n_in = static_cast<int64_t>(x.size());
  const int64_t n_out = static_cast<int64_t>(acc.size());
  for (int64_t n = 0; n < n_out; ++n) {
    int64_t base = n + kernel.offset;
    double y = 0.0;
    int64_t j0 = std::max<int64_t>(0, -base);
    int64_t j1 = std::min<int64_t>(32, n_in - base);
    for (int64_t j = j0; j < j1; ++j) {
      y += kernel.coeff[j] * x[base + j];
    }
    acc[n] += gain * y;
  }
}

std::vector<float> ApplyDelay(std::span<const float> x, double delay_samples) {
  std::vector<double> acc(x.size(), 0.0);
  AccumulateDelayed(x, MakeDelayKernel(delay_samples), 1.0, acc);
  std::vector<float> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = static_cast<float>(acc[i]);
  return out;
}

}  // namespace mkws
