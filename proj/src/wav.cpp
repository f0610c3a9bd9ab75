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

#include "mkws/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "mkws/common.hpp"

namespace mkws {

namespace {

void PutU32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
  out.push_back((v >> 16) & 0xff);
  out.push_back((v >> 24) & 0xff);
}

void PutU16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
}

int16_t FloatToPcm16(float x) {
  double v = std::lround(std::clamp(static_cast<double>(x), -1.0, 1.0) * 32767.0);
  return static_cast<int16_t>(v);
}

uint32_t GetU32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t GetU16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

void WriteWav(const std::string& path,
              const std::vector<std::vector<float>>& channels, int sample_rate) {
  if (channels.empty()) throw DataError("WriteWav: no channels");
  size_t num_samples = channels[0].size();
  for (const auto& ch : channels) {
    if (ch.size() != num_samples) throw DataError("WriteWav: channel length mismatch");
  }
  uint16_t num_channels = static_cast<uint16_t>(channels.size());
  uint32_t data_bytes = static_cast<uint32_t>(num_samples * num_channels * 2);

  std::vector<uint8_t> out;
  out.reserve(44 + data_bytes);
  const char* riff = "RIFF";
  out.insert(out.end(), riff, riff + 4);
  PutU32(out, 36 + data_bytes);
  const char* wavefmt = "WAVEfmt ";
  out.insert(out.end(), wavefmt, wavefmt + 8);
  PutU32(out, 16);
  PutU16(out, 1);  // PCM
  PutU16(out, num_channels);
  PutU32(out, static_cast<uint32_t>(sample_rate));
  PutU32(out, static_cast<uint32_t>(sample_rate) * num_channels * 2);
  PutU16(out, static_cast<uint16_t>(num_channels * 2));
  PutU16(out, 16);
  const char* data = "data";
  out.insert(out.end(), data, data + 4);
  PutU32(out, data_bytes);
  for (size_t i = 0; i < num_samples; ++i) {
    for (uint16_t c = 0; c < num_channels; ++c) {
      int16_t s = FloatToPcm16(channels[c][i]);
      out.push_back(static_cast<uint8_t>(s & 0xff));
      out.push_back(static_cast<uint8_t>((s >> 8) & 0xff));
    }
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("WriteWav: cannot open " + path);
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) throw DataError("WriteWav: write failed for " + path);
}

WavData ReadWav(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DataError("ReadWav: cannot open " + path);
  std::vector<uint8_t> raw((std::istreambuf_iterator<char>(f)),
                           std::istreambuf_iterator<char>());
  if (raw.size() < 44 || std::memcmp(raw.data(), "RIFF", 4) != 0 ||
      std::memcmp(raw.data() + 8, "WAVE", 4) != 0) {
    throw DataError("ReadWav: not a RIFF/WAVE file: " + path);
  }

  WavData result;
  uint16_t num_channels = 0, bits = 0;
  size_t pos = 12;
  bool have_fmt = false, have_data = false;
  while (pos + 8 <= raw.size()) {
    uint32_t chunk_size = GetU32(raw.data() + pos + 4);
    const uint8_t* body = raw.data() + pos + 8;
    if (std::memcmp(raw.data() + pos, "fmt ", 4) == 0 && chunk_size >= 16) {
      uint16_t format = GetU16(body);
      num_channels = GetU16(body + 2);
      result.sample_rate = static_cast<int>(GetU32(body + 4));
      bits = GetU16(body + 14);
      if (format != 1 || bits != 16) throw DataError("ReadWav: only PCM16 supported: " + path);
      have_fmt = true;
    } else if (std::memcmp(raw.data() + pos, "data", 4) == 0) {
      if (!have_fmt) throw DataError("ReadWav: data before fmt: " + path);
      size_t avail = std::min<size_t>(chunk_size, raw.size() - pos - 8);
      size_t frames = avail / (num_channels * 2);
      result.channels.assign(num_channels, std::vector<float>(frames));
      for (size_t i = 0; i < frames; ++i) {
        for (uint16_t c = 0; c < num_channels; ++c) {
          const uint8_t* p = body + (i * num_channels + c) * 2;
          int16_t s = static_cast<int16_t>(p[0] | (p[1] << 8));
          result.channels[c][i] = static_cast<float>(s) / 32767.0f;
        }
      }
      have_data = true;
    }
    pos += 8 + chunk_size + (chunk_size & 1);
  }
  if (!have_data) throw DataError("ReadWav: no data chunk: " + path);
  return result;
}

}  // namespace mkws
