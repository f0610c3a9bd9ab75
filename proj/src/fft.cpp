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

#include "mkws/fft.hpp"

#include "mkws/common.hpp"

namespace mkws {

Fft::Fft(int size) : size_(size) {
  if (size < 2 || (size & (size - 1)) != 0) {
    throw ConfigError("fft size must be a power of two, got " + std::to_string(size));
  }
  bit_reverse_.resize(size);
  int log2n = 0;
  while ((1 << log2n) < size) ++log2n;
  for (int i = 0; i < size; ++i) {
    int r = 0;
    for (int b = 0; b < log2n; ++b) {
      if (i & (1 << b)) r |= 1 << (log2n - 1 - b);
    }
    bit_reverse_[i] = r;
  }
  twiddles_.resize(size / 2);
  for (int k = 0; k < size / 2; ++k) {
    double ang = -2.0 * kPi * k / size;
    twiddles_[k] = {std::cos(ang), std::sin(ang)};
  }
}

void Fft::Forward(std::vector<std::complex<double>>& a) const {
  if (static_cast<int>(a.size()) != size_) {
    throw ConfigError("fft input size mismatch");
  }
  for (int i = 0; i < size_; ++i) {
    int j = bit_reverse_[i];
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= size_; len <<= 1) {
    int stride = size_ / len;
    for (int start = 0; start < size_; start += len) {
      for (int k = 0; k < len / 2; ++k) {
        std::complex<double> w = twiddles_[static_cast<size_t>(k) * stride];
        std::complex<double> u = a[start + k];
        std::complex<double> t = w * a[start + k + len / 2];
        a[start + k] = u + t;
        a[start + k + len / 2] = u - t;
      }
    }
  }
}

}  // namespace mkws
