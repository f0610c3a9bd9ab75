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

#ifndef MKWS_COMMON_HPP
#define MKWS_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mkws {

constexpr double kPi = 3.14159265358979323846;

// Bad flags, unknown presets, mismatched shapes. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Missing or inconsistent data, diverged training. CLI exit code 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic splitmix64 generator. Standard-library distributions are not
// bit-stable across implementations, so the uniform/normal transforms live
// here too.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  // Independent stream for (seed, index) pairs; lets per-record generation
  // parallelize without changing output.
  static Rng Derive(uint64_t seed, uint64_t stream) {
    Rng r(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
    r.NextU64();
    return r;
  }

  uint64_t NextU64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(NextU64() >> 11) * 0x1.0p-53; }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // [0, n)
  int UniformInt(int n) { return static_cast<int>(NextU64() % static_cast<uint64_t>(n)); }

  double Normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1, u2;
    do {
      u1 = Uniform();
    } while (u1 <= 1e-300);
    u2 = Uniform();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * kPi * u2);
    has_spare_ = true;
    return mag * std::cos(2.0 * kPi * u2);
  }

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Row-major double matrix used by the network and trainer.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }
  double* row(int r) { return v.data() + static_cast<size_t>(r) * cols; }
  const double* row(int r) const { return v.data() + static_cast<size_t>(r) * cols; }
};

inline double DbToAmplitude(double db) { return std::pow(10.0, db / 20.0); }
inline double PowerToDb(double p) { return 10.0 * std::log10(p); }

// Calibration reference: 94 dB SPL maps to digital RMS 0.1 full scale.
constexpr double kReferenceSpl = 94.0;
constexpr double kReferenceRms = 0.1;

inline double SplToRms(double spl) {
  return kReferenceRms * DbToAmplitude(spl - kReferenceSpl);
}

inline double Rms(std::span<const float> x) {
  double acc = 0.0;
  for (float s : x) acc += static_cast<double>(s) * s;
  return x.empty() ? 0.0 : std::sqrt(acc / static_cast<double>(x.size()));
}

inline double MeanPower(std::span<const float> x) {
  double acc = 0.0;
  for (float s : x) acc += static_cast<double>(s) * s;
  return x.empty() ? 0.0 : acc / static_cast<double>(x.size());
}

}  // namespace mkws

#endif  // MKWS_COMMON_HPP
