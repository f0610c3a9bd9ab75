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

#ifndef MKWS_FFT_HPP
#define MKWS_FFT_HPP

#include <complex>
#include <vector>

namespace mkws {

// Iterative radix-2 complex FFT with precomputed twiddles for one fixed
// power-of-two size.
class Fft {
 public:
  explicit Fft(int size);

  int size() const { return size_; }

  // In-place forward transform; a.size() must equal size().
  void Forward(std::vector<std::complex<double>>& a) const;

 private:
  int size_;
  std::vector<int> bit_reverse_;
  std::vector<std::complex<double>> twiddles_;
};

}  // namespace mkws

#endif  // MKWS_FFT_HPP
