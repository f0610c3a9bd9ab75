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

#include "mkws/synth.hpp"

#include <algorithm>
#include <cmath>

#include "mkws/common.hpp"

namespace mkws {

namespace {

void PeakNormalize(std::vector<float>& x) {
  float peak = 0.0f;
  for (float s : x) peak = std::max(peak, std::abs(s));
  if (peak > 0.0f) {
    float g = 1.0f / peak;
    for (float& s : x) s *= g;
  }
}

struct Segment {
  double dur_s;
  double f1, f2;        // formant centers, Hz
  double glide;         // relative f0 drift over the segment
};

// Shared "word": ah - ee - oo. Presets differ in pitch register.
constexpr Segment kSegments[3] = {
    {0.20, 700.0, 1220.0, +0.12},
    {0.20, 390.0, 2300.0, -0.08},
    {0.24, 450.0, 1000.0, -0.15},
};
constexpr double kSegmentGap = 0.02;

double FormantGain(double f, double f1, double f2) {
  double g1 = std::exp(-0.5 * (f - f1) * (f - f1) / (90.0 * 90.0));
  double g2 = 0.6 * std::exp(-0.5 * (f - f2) * (f - f2) / (140.0 * 140.0));
  return g1 + g2 + 0.02;
}

// One-pole lowpass/highpass helpers for the noise shapers.
struct OnePole {
  double a = 0.0, state = 0.0;
  double Low(double x) {
    state += a * (x - state);
    return state;
  }
};

std::vector<float> WhiteNoise(int n, Rng& rng) {
  std::vector<float> x(n);
  for (int i = 0; i < n; ++i) x[i] = static_cast<float>(rng.Normal() * 0.25);
  return x;
}

// Paul Kellett's pink noise filter; -3 dB/octave to well within a dB
// over the band we care about.
std::vector<float> PinkNoise(int n, Rng& rng) {
  std::vector<float> x(n);
  double b0 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0, b6 = 0;
  for (int i = 0; i < n; ++i) {
    double white = rng.Normal();
    b0 = 0.99886 * b0 + white * 0.0555179;
    b1 = 0.99332 * b1 + white * 0.0750759;
    b2 = 0.96900 * b2 + white * 0.1538520;
    b3 = 0.86650 * b3 + white * 0.3104856;
    b4 = 0.55000 * b4 + white * 0.5329522;
    b5 = -0.7616 * b5 - white * 0.0168980;
    double pink = b0 + b1 + b2 + b3 + b4 + b5 + b6 + white * 0.5362;
    b6 = white * 0.115926;
    x[i] = static_cast<float>(pink * 0.05);
  }
  return x;
}

std::vector<float> BabbleNoise(int n, int fs, Rng& rng, int voices) {
  std::vector<double> acc(n, 0.0);
  for (int v = 0; v < voices; ++v) {
    double am_rate = rng.Uniform(2.5, 6.0);
    double am_phase = rng.Uniform(0.0, 2.0 * kPi);
    double center = rng.Uniform(300.0, 2800.0);
    double bw = rng.Uniform(150.0, 500.0);
    // 2nd-order resonator driven by white noise
    double r = std::exp(-kPi * bw / fs);
    double theta = 2.0 * kPi * center / fs;
    double a1 = -2.0 * r * std::cos(theta), a2 = r * r;
    double y1 = 0.0, y2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double t = static_cast<double>(i) / fs;
      double e = rng.Normal();
      double y = e - a1 * y1 - a2 * y2;
      y2 = y1;
      y1 = y;
      double am = 0.5 * (1.0 + std::sin(2.0 * kPi * am_rate * t + am_phase));
      acc[i] += y * am;
    }
  }
  std::vector<float> x(n);
  for (int i = 0; i < n; ++i) x[i] = static_cast<float>(acc[i] / voices);
  return x;
}

std::vector<float> AmToneNoise(int n, int fs, Rng& rng) {
  double carrier = rng.Uniform(400.0, 3000.0);
  double am_rate = rng.Uniform(2.0, 8.0);
  double am_phase = rng.Uniform(0.0, 2.0 * kPi);
  double phase0 = rng.Uniform(0.0, 2.0 * kPi);
  std::vector<float> x(n);
  for (int i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / fs;
    double am = 1.0 - 0.8 * 0.5 * (1.0 + std::sin(2.0 * kPi * am_rate * t + am_phase));
    x[i] = static_cast<float>(am * std::sin(2.0 * kPi * carrier * t + phase0));
  }
  return x;
}

std::vector<float> KitchenNoise(int n, int fs, Rng& rng) {
  // Sparse metallic clatter over a quiet broadband floor.
  std::vector<double> acc(n, 0.0);
  for (int i = 0; i < n; ++i) acc[i] = 0.05 * rng.Normal();
  int num_hits = std::max(1, static_cast<int>(3.0 * n / fs));
  for (int h = 0; h < num_hits; ++h) {
    int start = rng.UniformInt(std::max(1, n - fs / 8));
    double f_ring1 = rng.Uniform(1500.0, 3500.0);
    double f_ring2 = rng.Uniform(4000.0, 6500.0);
    double decay = rng.Uniform(25.0, 60.0);
    double amp = rng.Uniform(0.4, 1.0);
    int len = std::min(n - start, fs / 8);
    for (int i = 0; i < len; ++i) {
      double t = static_cast<double>(i) / fs;
      double env = std::exp(-decay * t);
      acc[start + i] += amp * env *
                        (std::sin(2.0 * kPi * f_ring1 * t) + 0.6 * std::sin(2.0 * kPi * f_ring2 * t) +
                         0.4 * rng.Normal());
    }
  }
  std::vector<float> x(n);
  for (int i = 0; i < n; ++i) x[i] = static_cast<float>(acc[i]);
  return x;
}

std::vector<float> StreetNoise(int n, int fs, Rng& rng) {
  // Low rumble (integrated white, leaky) with a slow passing-vehicle swell.
  std::vector<float> x(n);
  double state = 0.0;
  double swell_rate = rng.Uniform(0.08, 0.25);
  double swell_phase = rng.Uniform(0.0, 2.0 * kPi);
  OnePole hp{0.002, 0.0};
  for (int i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / fs;
    state = 0.995 * state + 0.1 * rng.Normal();
    double rumble = state - hp.Low(state);  // remove DC
    double swell = 0.6 + 0.4 * std::sin(2.0 * kPi * swell_rate * t + swell_phase);
    double hiss = 0.08 * rng.Normal();
    x[i] = static_cast<float>(swell * rumble + hiss);
  }
  return x;
}

std::vector<float> VacuumNoise(int n, int fs, Rng& rng) {
  // Motor hum harmonics plus strong shaped broadband noise.
  double f0 = rng.Uniform(110.0, 130.0);
  std::vector<float> x(n);
  OnePole lp{0.35, 0.0};
  for (int i = 0; i < n; ++i) {
    double t = static_cast<double>(i) / fs;
    double hum = 0.0;
    for (int k = 1; k <= 6; ++k) {
      hum += std::sin(2.0 * kPi * k * f0 * t) / k;
    }
    double broad = lp.Low(rng.Normal()) * 1.2;
    x[i] = static_cast<float>(0.35 * hum + broad);
  }
  return x;
}

}  // namespace

VoicePreset VoicePresetFromName(const std::string& name) {
  if (name == "low") return VoicePreset::kLow;
  if (name == "mid") return VoicePreset::kMid;
  if (name == "high") return VoicePreset::kHigh;
  throw ConfigError("unknown voice preset: " + name);
}

std::string VoicePresetName(VoicePreset preset) {
  switch (preset) {
    case VoicePreset::kLow: return "low";
    case VoicePreset::kMid: return "mid";
    case VoicePreset::kHigh: return "high";
  }
  return "low";
}

std::vector<float> SynthKeyword(VoicePreset preset, uint64_t seed, int sample_rate) {
  Rng rng = Rng::Derive(seed, 0x6b77ULL);
  double f0_base;
  switch (preset) {
    case VoicePreset::kLow: f0_base = 115.0; break;
    case VoicePreset::kMid: f0_base = 210.0; break;
    case VoicePreset::kHigh: f0_base = 300.0; break;
    default: f0_base = 115.0; break;
  }
  f0_base *= 1.0 + rng.Uniform(-0.08, 0.08);

  std::vector<float> out;
  for (const Segment& seg : kSegments) {
    double dur = seg.dur_s * (1.0 + rng.Uniform(-0.10, 0.10));
    int n = static_cast<int>(dur * sample_rate);
    int max_harmonics = static_cast<int>(6800.0 / f0_base);
    std::vector<double> phase(max_harmonics + 1, 0.0);
    for (int k = 1; k <= max_harmonics; ++k) phase[k] = rng.Uniform(0.0, 2.0 * kPi);

    std::vector<float> segment(n, 0.0f);
    for (int i = 0; i < n; ++i) {
      double pos = static_cast<double>(i) / n;
      double f0 = f0_base * (1.0 + seg.glide * pos);
      double env = 1.0;
      double t_s = static_cast<double>(i) / sample_rate;
      double tail_s = static_cast<double>(n - 1 - i) / sample_rate;
      if (t_s < 0.025) env *= 0.5 * (1.0 - std::cos(kPi * t_s / 0.025));
      if (tail_s < 0.035) env *= 0.5 * (1.0 - std::cos(kPi * tail_s / 0.035));
      double sample = 0.0;
      for (int k = 1; k <= max_harmonics; ++k) {
        double f = k * f0;
        if (f > 6800.0) break;
        phase[k] += 2.0 * kPi * f / sample_rate;
        sample += FormantGain(f, seg.f1, seg.f2) / k * std::sin(phase[k]);
      }
      segment[i] = static_cast<float>(env * sample);
    }
    out.insert(out.end(), segment.begin(), segment.end());
    int gap = static_cast<int>(kSegmentGap * sample_rate);
    out.insert(out.end(), gap, 0.0f);
  }
  PeakNormalize(out);
  return out;
}

std::vector<float> SynthNoise(const std::string& noise_type, double duration_s,
                              uint64_t seed, int sample_rate) {
  if (duration_s <= 0.0) throw ConfigError("noise duration must be positive");
  int n = static_cast<int>(duration_s * sample_rate);
  Rng rng = Rng::Derive(seed, std::hash<std::string>{}(noise_type));
  std::vector<float> x;
  if (noise_type == "white") {
    x = WhiteNoise(n, rng);
  } else if (noise_type == "pink") {
    x = PinkNoise(n, rng);
  } else if (noise_type == "babble") {
    x = BabbleNoise(n, sample_rate, rng, 6);
  } else if (noise_type == "tv") {
    // speech-program texture: denser babble with a level wobble
    x = BabbleNoise(n, sample_rate, rng, 3);
  } else if (noise_type == "am_tone") {
    x = AmToneNoise(n, sample_rate, rng);
  } else if (noise_type == "kitchen") {
    x = KitchenNoise(n, sample_rate, rng);
  } else if (noise_type == "street") {
    x = StreetNoise(n, sample_rate, rng);
  } else if (noise_type == "vacuum") {
    x = VacuumNoise(n, sample_rate, rng);
  } else {
    throw ConfigError("unknown noise type: " + noise_type);
  }
  PeakNormalize(x);
  return x;
}

const std::vector<std::string>& DefaultNoiseTypes() {
  static const std::vector<std::string> kTypes = {"kitchen", "street", "vacuum",
                                                  "white",   "pink",   "tv"};
  return kTypes;
}

}  // namespace mkws
