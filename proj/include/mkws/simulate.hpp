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

#ifndef MKWS_SIMULATE_HPP
#define MKWS_SIMULATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mkws/clip.hpp"
#include "mkws/geometry.hpp"

namespace mkws {

// Far-field plane-wave rendering of one source onto all microphones,
// scaled to the source's calibrated SPL. Channel m is the waveform delayed
// by tau_m = -(r_m . u) / c; the center mic delay is exactly zero.
MultichannelClip Propagate(const ArrayGeometry& geometry, const SourceSpec& source);

// Same, but summing into a caller-owned double accumulator (7 x N).
void PropagateAccumulate(const ArrayGeometry& geometry, const SourceSpec& source,
                         std::vector<std::vector<double>>& acc);

struct MixOptions {
  double min_onset_s = 1.3;   // noise-only lead-in before the keyword
  double end_margin_s = 0.05;
  uint64_t seed = 0;          // drives keyword placement
};

// One acoustic-lab record: noise source over the full clip plus a keyword
// placed after the lead-in. Clip length follows the noise waveform.
MultichannelClip MixLabRecord(const ArrayGeometry& geometry, const SourceSpec& keyword,
                              const SourceSpec& noise, const MixOptions& options);

// Recording session protocol for the simulated acoustic laboratory.
struct LabProtocol {
  std::vector<std::string> noise_types;
  std::vector<double> keyword_levels_db = {35, 40, 45, 50, 55, 60, 65};
  double noise_level_db = 60.0;
  int records = 900;
  double duration_s = 3.0;
  double min_onset_s = 1.3;

  LabProtocol();
  void Validate() const;
  // Distinct SNR grid, ascending: keyword_levels_db - noise_level_db.
  std::vector<double> SnrGrid() const;
};

// Generator protocol for training/dev/test corpora (synthetic stand-in for
// recorded keyword data): positives are lab-style mixtures, negatives are
// noise-only clips.
struct KwsDataProtocol {
  std::vector<std::string> noise_types;
  std::vector<double> keyword_levels_db = {40, 45, 50, 55, 60, 65, 70, 75};
  double noise_level_db = 60.0;
  int positive_records = 200;
  int negative_records = 160;
  double positive_duration_s = 3.0;
  double negative_duration_s = 7.2;
  double min_onset_s = 1.3;

  KwsDataProtocol();
};

// Everything needed to re-render one clip deterministically.
struct RecordSpec {
  int64_t index = 0;
  bool is_positive = true;
  std::string noise_type;
  double noise_level_db = 60.0;
  double keyword_level_db = 60.0;
  std::string voice = "low";
  double keyword_azimuth_deg = 0.0;
  double noise_azimuth_deg = 0.0;
  double duration_s = 3.0;
  int64_t span_begin = 0;
  int64_t span_end = 0;
  uint64_t seed = 0;
  std::string path;

  double snr_db() const { return keyword_level_db - noise_level_db; }
};

struct Dataset {
  ArrayGeometry geometry;
  std::vector<RecordSpec> records;
};

Dataset GenerateLabDataset(const ArrayGeometry& geometry, const LabProtocol& protocol,
                           uint64_t seed);
Dataset GenerateKwsDataset(const ArrayGeometry& geometry, const KwsDataProtocol& protocol,
                           uint64_t seed);

MultichannelClip RenderRecord(const ArrayGeometry& geometry, const RecordSpec& record);

// JSON-lines manifest, one record per clip.
void WriteManifest(const Dataset& dataset, const std::string& path);
Dataset ReadManifest(const std::string& path);

// 7-channel PCM16 WAV export for each record; fills in record paths.
void ExportWavs(Dataset& dataset, const std::string& dir);

}  // namespace mkws

#endif  // MKWS_SIMULATE_HPP
