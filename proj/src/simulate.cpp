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

#include "mkws/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "mkws/synth.hpp"
#include "mkws/wav.hpp"

namespace mkws {

namespace {

using nlohmann::json;

constexpr uint64_t kKeywordStream = 11;
constexpr uint64_t kNoiseStream = 23;
constexpr uint64_t kPlacementStream = 37;

double AzimuthDistanceDeg(double a, double b) {
  double d = std::fmod(std::abs(a - b), 360.0);
  return std::min(d, 360.0 - d);
}

void CheckSourceOutsideArray(const ArrayGeometry& g, const SourceSpec& s) {
  if (s.distance_m <= g.ring_radius()) {
    throw ConfigError("source at distance " + std::to_string(s.distance_m) +
                      " m lies inside the array");
  }
  if (s.waveform.empty()) throw ConfigError("source waveform is empty");
}

std::vector<float> CastToFloat(const std::vector<std::vector<double>>& acc, int m) {
  std::vector<float> out(acc[m].size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<float>(acc[m][i]);
  return out;
}

}  // namespace

void PropagateAccumulate(const ArrayGeometry& geometry, const SourceSpec& source,
                         std::vector<std::vector<double>>& acc) {
  CheckSourceOutsideArray(geometry, source);
  double rms = Rms(source.waveform);
  double gain = rms > 0.0 ? SplToRms(source.level_db_spl) / rms : 0.0;
  for (int m = 0; m < geometry.num_mics(); ++m) {
    double delay = geometry.SteeringDelaySeconds(m, source.azimuth_deg) *
                   geometry.sample_rate;
    AccumulateDelayed(source.waveform, MakeDelayKernel(delay), gain, acc[m]);
  }
}

MultichannelClip Propagate(const ArrayGeometry& geometry, const SourceSpec& source) {
  CheckSourceOutsideArray(geometry, source);
  std::vector<std::vector<double>> acc(geometry.num_mics(),
                                       std::vector<double>(source.waveform.size(), 0.0));
  PropagateAccumulate(geometry, source, acc);
  MultichannelClip clip;
  clip.sample_rate = geometry.sample_rate;
  clip.channels.reserve(geometry.num_mics());
  for (int m = 0; m < geometry.num_mics(); ++m) {
    clip.channels.push_back(CastToFloat(acc, m));
  }
  return clip;
}

MultichannelClip MixLabRecord(const ArrayGeometry& geometry, const SourceSpec& keyword,
                              const SourceSpec& noise, const MixOptions& options) {
  CheckSourceOutsideArray(geometry, keyword);
  CheckSourceOutsideArray(geometry, noise);

  const int64_t n = static_cast<int64_t>(noise.waveform.size());
  const int64_t kw_len = static_cast<int64_t>(keyword.waveform.size());
  const int fs = geometry.sample_rate;

  int64_t lo = static_cast<int64_t>(options.min_onset_s * fs);
  int64_t hi = n - kw_len - static_cast<int64_t>(options.end_margin_s * fs);
  if (hi < lo) {
    throw ConfigError("clip too short to place the keyword after the lead-in");
  }
  Rng place = Rng::Derive(options.seed, kPlacementStream);
  int64_t offset = lo + static_cast<int64_t>(place.Uniform() * static_cast<double>(hi - lo + 1));
  offset = std::min(offset, hi);

  SourceSpec padded = keyword;
  padded.waveform.assign(n, 0.0f);
  std::copy(keyword.waveform.begin(), keyword.waveform.end(),
            padded.waveform.begin() + offset);

  std::vector<std::vector<double>> acc(geometry.num_mics(), std::vector<double>(n, 0.0));
  PropagateAccumulate(geometry, noise, acc);
  PropagateAccumulate(geometry, padded, acc);

  MultichannelClip clip;
  clip.sample_rate = fs;
  clip.label = ClipLabel::kKeyword;
  clip.span = {offset, offset + kw_len};
  clip.meta.snr_db = keyword.level_db_spl - noise.level_db_spl;
  clip.meta.keyword_azimuth_deg = keyword.azimuth_deg;
  clip.meta.noise_azimuth_deg = noise.azimuth_deg;
  clip.meta.seed = options.seed;
  if (AzimuthDistanceDeg(keyword.azimuth_deg, noise.azimuth_deg) < 5.0) {
    clip.meta.warning = "keyword and noise sources closer than 5 degrees";
  }
  for (int m = 0; m < geometry.num_mics(); ++m) {
    clip.channels.push_back(CastToFloat(acc, m));
  }
  return clip;
}

LabProtocol::LabProtocol() : noise_types(DefaultNoiseTypes()) {}
KwsDataProtocol::KwsDataProtocol() : noise_types(DefaultNoiseTypes()) {}

void LabProtocol::Validate() const {
  if (noise_types.empty()) throw ConfigError("lab protocol: no noise types");
  if (keyword_levels_db.empty()) throw ConfigError("lab protocol: no keyword levels");
  if (records < 0) throw ConfigError("lab protocol: negative record count");
  if (duration_s <= min_onset_s) {
    throw ConfigError("lab protocol: duration must exceed the keyword lead-in");
  }
}

std::vector<double> LabProtocol::SnrGrid() const {
  std::vector<double> grid;
  for (double l : keyword_levels_db) grid.push_back(l - noise_level_db);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

RecordSpec MakePositiveSpec(const ArrayGeometry& geometry, int64_t index, uint64_t seed,
                            const std::vector<std::string>& noise_types,
                            const std::vector<double>& levels, double noise_level_db,
                            double duration_s, double min_onset_s) {
  RecordSpec rec;
  rec.index = index;
  rec.is_positive = true;
  rec.seed = Rng::Derive(seed, static_cast<uint64_t>(index)).NextU64();
  Rng rng = Rng::Derive(rec.seed, 1);
  rec.noise_type = noise_types[rng.UniformInt(static_cast<int>(noise_types.size()))];
  rec.keyword_level_db = levels[rng.UniformInt(static_cast<int>(levels.size()))];
  rec.noise_level_db = noise_level_db;
  static const char* kVoices[3] = {"low", "mid", "high"};
  rec.voice = kVoices[rng.UniformInt(3)];
  rec.keyword_azimuth_deg = rng.Uniform(0.0, 360.0);
  rec.noise_azimuth_deg = rng.Uniform(0.0, 360.0);
  rec.duration_s = duration_s;

  // Placement mirrors MixLabRecord so the span can go into the manifest.
  auto kw = SynthKeyword(VoicePresetFromName(rec.voice), Rng::Derive(rec.seed, kKeywordStream).NextU64(),
                         geometry.sample_rate);
  int fs = geometry.sample_rate;
  int64_t n = static_cast<int64_t>(duration_s * fs);
  int64_t lo = static_cast<int64_t>(min_onset_s * fs);
  int64_t hi = n - static_cast<int64_t>(kw.size()) - fs / 20;
  if (hi < lo) throw ConfigError("record too short for keyword placement");
  Rng place = Rng::Derive(rec.seed, kPlacementStream);
  int64_t offset = lo + static_cast<int64_t>(place.Uniform() * static_cast<double>(hi - lo + 1));
  offset = std::min(offset, hi);
  rec.span_begin = offset;
  rec.span_end = offset + static_cast<int64_t>(kw.size());
  return rec;
}

RecordSpec MakeNegativeSpec(int64_t index, uint64_t seed,
                            const std::vector<std::string>& noise_types,
                            double noise_level_db, double duration_s) {
  RecordSpec rec;
  rec.index = index;
  rec.is_positive = false;
  rec.seed = Rng::Derive(seed, static_cast<uint64_t>(index)).NextU64();
  Rng rng = Rng::Derive(rec.seed, 1);
  rec.noise_type = noise_types[rng.UniformInt(static_cast<int>(noise_types.size()))];
  rec.noise_level_db = noise_level_db;
  rec.keyword_level_db = 0.0;
  rec.noise_azimuth_deg = rng.Uniform(0.0, 360.0);
  rec.duration_s = duration_s;
  return rec;
}

std::string RecordFileName(const RecordSpec& rec) {
  return "record_" + std::to_string(rec.index) + ".wav";
}

}  // namespace

Dataset GenerateLabDataset(const ArrayGeometry& geometry, const LabProtocol& protocol,
                           uint64_t seed) {
  protocol.Validate();
  Dataset ds;
  ds.geometry = geometry;
  ds.records.reserve(protocol.records);
  for (int64_t i = 0; i < protocol.records; ++i) {
    RecordSpec rec = MakePositiveSpec(geometry, i, seed, protocol.noise_types,
                                      protocol.keyword_levels_db, protocol.noise_level_db,
                                      protocol.duration_s, protocol.min_onset_s);
    rec.path = RecordFileName(rec);
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

Dataset GenerateKwsDataset(const ArrayGeometry& geometry, const KwsDataProtocol& protocol,
                           uint64_t seed) {
  Dataset ds;
  ds.geometry = geometry;
  int64_t total = protocol.positive_records + protocol.negative_records;
  ds.records.reserve(total);
  for (int64_t i = 0; i < total; ++i) {
    bool positive = i < protocol.positive_records;
    RecordSpec rec =
        positive ? MakePositiveSpec(geometry, i, seed, protocol.noise_types,
                                    protocol.keyword_levels_db, protocol.noise_level_db,
                                    protocol.positive_duration_s, protocol.min_onset_s)
                 : MakeNegativeSpec(i, seed, protocol.noise_types, protocol.noise_level_db,
                                    protocol.negative_duration_s);
    rec.path = RecordFileName(rec);
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

MultichannelClip RenderRecord(const ArrayGeometry& geometry, const RecordSpec& record) {
  auto noise_wave = SynthNoise(record.noise_type, record.duration_s,
                               Rng::Derive(record.seed, kNoiseStream).NextU64(),
                               geometry.sample_rate);
  SourceSpec noise;
  noise.azimuth_deg = record.noise_azimuth_deg;
  noise.level_db_spl = record.noise_level_db;
  noise.waveform = std::move(noise_wave);

  if (!record.is_positive) {
    MultichannelClip clip = Propagate(geometry, noise);
    clip.label = ClipLabel::kNegative;
    clip.meta.noise_type = record.noise_type;
    clip.meta.noise_azimuth_deg = record.noise_azimuth_deg;
    clip.meta.seed = record.seed;
    return clip;
  }

  auto kw_wave = SynthKeyword(VoicePresetFromName(record.voice),
                              Rng::Derive(record.seed, kKeywordStream).NextU64(),
                              geometry.sample_rate);
  const int64_t n = static_cast<int64_t>(noise.waveform.size());
  SourceSpec keyword;
  keyword.azimuth_deg = record.keyword_azimuth_deg;
  keyword.level_db_spl = record.keyword_level_db;
  keyword.waveform.assign(n, 0.0f);
  int64_t kw_len = std::min<int64_t>(static_cast<int64_t>(kw_wave.size()), n - record.span_begin);
  std::copy(kw_wave.begin(), kw_wave.begin() + kw_len,
            keyword.waveform.begin() + record.span_begin);

  std::vector<std::vector<double>> acc(geometry.num_mics(), std::vector<double>(n, 0.0));
  PropagateAccumulate(geometry, noise, acc);
  PropagateAccumulate(geometry, keyword, acc);

  MultichannelClip clip;
  clip.sample_rate = geometry.sample_rate;
  clip.label = ClipLabel::kKeyword;
  clip.span = {record.span_begin, record.span_end};
  clip.meta.snr_db = record.snr_db();
  clip.meta.noise_type = record.noise_type;
  clip.meta.keyword_azimuth_deg = record.keyword_azimuth_deg;
  clip.meta.noise_azimuth_deg = record.noise_azimuth_deg;
  clip.meta.seed = record.seed;
  if (AzimuthDistanceDeg(record.keyword_azimuth_deg, record.noise_azimuth_deg) < 5.0) {
    clip.meta.warning = "keyword and noise sources closer than 5 degrees";
  }
  for (int m = 0; m < geometry.num_mics(); ++m) {
    std::vector<float> ch(acc[m].size());
    for (size_t i = 0; i < ch.size(); ++i) ch[i] = static_cast<float>(acc[m][i]);
    clip.channels.push_back(std::move(ch));
  }
  return clip;
}

void WriteManifest(const Dataset& dataset, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw DataError("cannot write manifest: " + path);
  for (const RecordSpec& rec : dataset.records) {
    json j;
    j["path"] = rec.path;
    j["label"] = rec.is_positive ? "keyword" : "negative";
    if (rec.is_positive) {
      j["keyword_span"] = {rec.span_begin, rec.span_end};
      j["snr_db"] = rec.snr_db();
      j["keyword_azimuth_deg"] = rec.keyword_azimuth_deg;
      j["keyword_level_db"] = rec.keyword_level_db;
      j["voice"] = rec.voice;
    } else {
      j["keyword_span"] = nullptr;
      j["snr_db"] = nullptr;
      j["keyword_azimuth_deg"] = nullptr;
    }
    j["noise_type"] = rec.noise_type;
    j["noise_azimuth_deg"] = rec.noise_azimuth_deg;
    j["noise_level_db"] = rec.noise_level_db;
    j["duration_s"] = rec.duration_s;
    j["seed"] = rec.seed;
    j["index"] = rec.index;
    f << j.dump() << "\n";
  }
}

Dataset ReadManifest(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DataError("cannot read manifest: " + path);
  Dataset ds;
  ds.geometry = ArrayGeometry::Circular7();
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw DataError("bad manifest line: " + line);
    RecordSpec rec;
    rec.path = j.value("path", "");
    rec.is_positive = j.value("label", "negative") == "keyword";
    if (rec.is_positive) {
      rec.span_begin = j["keyword_span"][0].get<int64_t>();
      rec.span_end = j["keyword_span"][1].get<int64_t>();
      rec.keyword_azimuth_deg = j["keyword_azimuth_deg"].get<double>();
      rec.keyword_level_db = j["keyword_level_db"].get<double>();
      rec.voice = j.value("voice", "low");
    }
    rec.noise_type = j.value("noise_type", "white");
    rec.noise_azimuth_deg = j.value("noise_azimuth_deg", 0.0);
    rec.noise_level_db = j.value("noise_level_db", 60.0);
    rec.duration_s = j.value("duration_s", 3.0);
    rec.seed = j.value("seed", 0ULL);
    rec.index = j.value("index", static_cast<int64_t>(ds.records.size()));
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

void ExportWavs(Dataset& dataset, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (RecordSpec& rec : dataset.records) {
    MultichannelClip clip = RenderRecord(dataset.geometry, rec);
    std::string file = dir + "/" + RecordFileName(rec);
    WriteWav(file, clip.channels, clip.sample_rate);
    rec.path = file;
  }
}

}  // namespace mkws
