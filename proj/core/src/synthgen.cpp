// Copyright 2026 The sedkit authors
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

#include "sedkit/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "sedkit/error.hpp"
#include "sedkit/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace sedkit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kRampSeconds = 0.010;   // attack/release to avoid clicks
constexpr double kSilenceRefRms = 0.05;  // SNR reference when background is silent

const char* kind_tag(EventKind k) {
  switch (k) {
    case EventKind::kTone: return "tone";
    case EventKind::kChirp: return "chirp";
    case EventKind::kNoiseBurst: return "noise";
    case EventKind::kAmTone: return "am";
  }
  return "?";
}

}  // namespace

void SoundscapeSpec::validate() const {
  if (clip_duration <= 0) throw ConfigError("clip_duration must be positive");
  if (min_events < 0 || max_events < min_events) throw ConfigError("bad events_per_clip range");
  if (snr_db_hi < snr_db_lo) throw ConfigError("snr_db range bounds inverted");
  if (n_classes < 1 || n_classes > 10) throw ConfigError("n_classes must be in [1, 10]");
  if (sample_rate != 44100 && sample_rate != 16000) throw ConfigError("sample_rate must be 44100 or 16000");
  for (const EventTemplate& t : builtin_templates(n_classes)) {
    if (t.min_duration <= 0 || t.min_duration > t.max_duration) throw ConfigError("empty duration range");
    if (std::min(t.min_duration, clip_duration) > clip_duration)
      throw ConfigError("event duration exceeds clip length");
  }
}

std::vector<EventTemplate> builtin_templates(int n_classes) {
  // Base frequencies 500..5900 Hz spaced 600 Hz apart, all below the 7.2 kHz
  // resampler cutoff. Kinds cycle through the four synthesis flavors.
  static const EventKind kinds[4] = {EventKind::kTone, EventKind::kChirp, EventKind::kNoiseBurst,
                                     EventKind::kAmTone};
  std::vector<EventTemplate> out;
  for (int i = 0; i < n_classes; ++i) {
    EventTemplate t;
    t.class_id = i;
    t.kind = kinds[i % 4];
    t.base_frequency = 500.0 + 600.0 * i;
    switch (t.kind) {
      case EventKind::kTone: t.min_duration = 0.4; t.max_duration = 1.5; break;
      case EventKind::kChirp: t.min_duration = 0.5; t.max_duration = 1.5; break;
      case EventKind::kNoiseBurst: t.min_duration = 0.3; t.max_duration = 1.0; break;
      case EventKind::kAmTone: t.min_duration = 0.6; t.max_duration = 1.6; break;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s_%dhz", kind_tag(t.kind), static_cast<int>(t.base_frequency));
    t.name = buf;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> builtin_class_names(int n_classes) {
  std::vector<std::string> names;
  for (const EventTemplate& t : builtin_templates(n_classes)) names.push_back(t.name);
  return names;
}

namespace {

// Paul Kellet's economy pink-noise approximation.
struct PinkFilter {
  double b0 = 0, b1 = 0, b2 = 0;
  double step(double white) {
    b0 = 0.99765 * b0 + white * 0.0990460;
    b1 = 0.96300 * b1 + white * 0.2965164;
    b2 = 0.57000 * b2 + white * 1.0526913;
    return b0 + b1 + b2 + white * 0.1848;
  }
};

double ramp_gain(double t, double dur) {
  double ramp = std::min(kRampSeconds, dur / 4);
  if (ramp <= 0) return 1.0;
  if (t < ramp) return 0.5 - 0.5 * std::cos(kTwoPi / 2 * t / ramp);
  if (t > dur - ramp) return 0.5 - 0.5 * std::cos(kTwoPi / 2 * (dur - t) / ramp);
  return 1.0;
}

void synth_event(std::vector<real>& mix, const EventTemplate& tpl, double onset, double dur, double amp,
                 int sample_rate, Rng& rng) {
  const int64_t first = static_cast<int64_t>(std::llround(onset * sample_rate));
  const int64_t count = static_cast<int64_t>(std::llround(dur * sample_rate));
  const double phase0 = rng.uniform(0.0, kTwoPi);

  // Band noise is a sum of closely spaced sines with random phases: strictly
  // band-limited and reproducible from the clip rng alone.
  double noise_phase[9];
  double noise_amp[9];
  if (tpl.kind == EventKind::kNoiseBurst) {
    for (int i = 0; i < 9; ++i) {
      noise_phase[i] = rng.uniform(0.0, kTwoPi);
      noise_amp[i] = rng.uniform(0.5, 1.0);
    }
  }

  for (int64_t i = 0; i < count; ++i) {
    int64_t n = first + i;
    if (n < 0 || n >= static_cast<int64_t>(mix.size())) continue;
    double t = static_cast<double>(i) / sample_rate;
    double s = 0.0;
    switch (tpl.kind) {
      case EventKind::kTone:
        s = std::sin(kTwoPi * tpl.base_frequency * t + phase0);
        break;
      case EventKind::kChirp:
        // Linear sweep base -> base + 300 Hz across the event.
        s = std::sin(kTwoPi * (tpl.base_frequency * t + 150.0 * t * t / dur) + phase0);
        break;
      case EventKind::kNoiseBurst: {
        double acc = 0.0, norm = 0.0;
        for (int j = 0; j < 9; ++j) {
          double f = tpl.base_frequency + 50.0 * (j - 4);
          acc += noise_amp[j] * std::sin(kTwoPi * f * t + noise_phase[j]);
          norm += noise_amp[j] * noise_amp[j];
        }
        s = acc / std::sqrt(std::max(norm, 1e-12) / 2.0) * 0.70710678118654752;
        break;
      }
      case EventKind::kAmTone: {
        double env = 1.0 - 0.6 * (0.5 - 0.5 * std::cos(kTwoPi * 8.0 * t));
        s = env * std::sin(kTwoPi * tpl.base_frequency * t + phase0);
        break;
      }
    }
    mix[n] += static_cast<real>(amp * ramp_gain(t, dur) * s);
  }
}

}  // namespace

std::pair<AudioClip, EventList> render_clip(const SoundscapeSpec& spec, int clip_index) {
  spec.validate();
  if (clip_index < 0) throw ConfigError("clip_index must be >= 0");

  Rng rng = Rng(spec.seed).fork(static_cast<uint64_t>(clip_index));
  const int64_t n_samples = static_cast<int64_t>(std::llround(spec.clip_duration * spec.sample_rate));

  AudioClip clip;
  clip.sample_rate = spec.sample_rate;
  clip.samples.assign(static_cast<size_t>(n_samples), 0);

  double background_rms = 0.0;
  if (spec.background == Background::kPinkNoise) {
    PinkFilter pink;
    double sumsq = 0.0;
    for (int64_t i = 0; i < n_samples; ++i) {
      double v = pink.step(rng.normal()) * 0.02;
      clip.samples[i] = static_cast<real>(v);
      sumsq += v * v;
    }
    background_rms = std::sqrt(sumsq / std::max<int64_t>(n_samples, 1));
  }
  const double snr_ref = background_rms > 0 ? background_rms : kSilenceRefRms;

  const auto templates = builtin_templates(spec.n_classes);
  const int n_events = static_cast<int>(rng.uniform_int(spec.min_events, spec.max_events));

  EventList events;
  for (int e = 0; e < n_events; ++e) {
    const EventTemplate& tpl = templates[rng.uniform_int(0, spec.n_classes - 1)];
    double max_dur = std::min(tpl.max_duration, spec.clip_duration);
    double min_dur = std::min(tpl.min_duration, max_dur);
    double dur = rng.uniform(min_dur, max_dur);
    double onset = rng.uniform(0.0, spec.clip_duration - dur);
    double snr_db = rng.uniform(spec.snr_db_lo, spec.snr_db_hi);
    // Sine of amplitude a has RMS a/sqrt(2); pick a so event RMS over
    // background RMS matches the drawn SNR.
    double amp = snr_ref * std::pow(10.0, snr_db / 20.0) * std::sqrt(2.0);
    synth_event(clip.samples, tpl, onset, dur, amp, spec.sample_rate, rng);
    events.push_back({tpl.class_id, onset, onset + dur});
  }

  // Keep headroom for PCM16; rescaling preserves per-band energy ratios.
  real peak = 0;
  for (real v : clip.samples) peak = std::max(peak, std::abs(v));
  if (peak > static_cast<real>(0.99)) {
    real g = static_cast<real>(0.99) / peak;
    for (real& v : clip.samples) v *= g;
  }

  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.onset < b.onset; });
  return {std::move(clip), std::move(events)};
}

std::string CorpusManifest::wav_path(const std::string& clip_id) const {
  return (fs::path(root_dir) / audio_dir / clip_id).string();
}

std::vector<std::string> CorpusManifest::all_clip_ids() const {
  std::vector<std::string> ids;
  for (const auto& [id, _] : strong) ids.push_back(id);
  for (const auto& [id, _] : weak) ids.push_back(id);
  for (const std::string& id : unlabeled) ids.push_back(id);
  return ids;
}

CorpusManifest emit_corpus(const SoundscapeSpec& spec, int n_strong, int n_weak, int n_unlabeled,
                           const std::string& out_dir, int n_validation) {
  spec.validate();
  if (n_strong < 0 || n_weak < 0 || n_unlabeled < 0 || n_validation < 0)
    throw ConfigError("corpus counts must be >= 0");

  CorpusManifest m;
  m.seed = spec.seed;
  m.clip_duration = spec.clip_duration;
  m.sample_rate = spec.sample_rate;
  m.class_names = builtin_class_names(spec.n_classes);
  m.root_dir = out_dir;

  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / m.audio_dir, ec);
  if (ec) throw IoError("cannot create corpus directory: " + out_dir + " (" + ec.message() + ")");

  int index = 0;
  auto emit = [&](const char* prefix, int i) {
    auto [clip, events] = render_clip(spec, index++);
    char name[64];
    std::snprintf(name, sizeof(name), "%s_%04d.wav", prefix, i);
    write_wav_pcm16((fs::path(out_dir) / m.audio_dir / name).string(), clip);
    return std::make_pair(std::string(name), std::move(events));
  };

  for (int i = 0; i < n_strong; ++i) m.strong.push_back(emit("strong", i));
  for (int i = 0; i < n_weak; ++i) {
    auto [name, events] = emit("weak", i);
    std::set<int> classes;
    for (int c : weak_projection(events)) classes.insert(c);
    m.weak.emplace_back(name, std::move(classes));
  }
  for (int i = 0; i < n_unlabeled; ++i) m.unlabeled.push_back(emit("unlabeled", i).first);
  for (int i = 0; i < n_validation; ++i) m.validation.push_back(emit("validation", i));

  save_manifest(m);
  return m;
}

void save_manifest(const CorpusManifest& m) {
  const fs::path root(m.root_dir);

  write_strong_tsv((root / "strong.tsv").string(), m.strong, m.class_names);

  // Weak rows keep first-onset order of the erased strong labels.
  std::vector<std::pair<std::string, std::vector<int>>> weak_rows;
  for (const auto& [id, classes] : m.weak) weak_rows.emplace_back(id, std::vector<int>(classes.begin(), classes.end()));
  write_weak_tsv((root / "weak.tsv").string(), weak_rows, m.class_names);

  write_name_list((root / "unlabeled.tsv").string(), m.unlabeled);
  write_strong_tsv((root / "validation.tsv").string(), m.validation, m.class_names);

  json j;
  j["seed"] = m.seed;
  j["clip_duration"] = m.clip_duration;
  j["sample_rate"] = m.sample_rate;
  j["class_names"] = m.class_names;
  j["audio_dir"] = m.audio_dir;
  j["strong_tsv"] = "strong.tsv";
  j["weak_tsv"] = "weak.tsv";
  j["unlabeled_list"] = "unlabeled.tsv";
  j["validation_tsv"] = "validation.tsv";
  j["counts"] = {{"strong", m.strong.size()},
                 {"weak", m.weak.size()},
                 {"unlabeled", m.unlabeled.size()},
                 {"validation", m.validation.size()}};
  json clips = json::object();
  auto rel = [&](const std::string& id) { return m.audio_dir + "/" + id; };
  for (const auto& [id, _] : m.strong) clips[id] = rel(id);
  for (const auto& [id, _] : m.weak) clips[id] = rel(id);
  for (const std::string& id : m.unlabeled) clips[id] = rel(id);
  for (const auto& [id, _] : m.validation) clips[id] = rel(id);
  j["clips"] = clips;
  json order;
  order["strong"] = json::array();
  for (const auto& [id, _] : m.strong) order["strong"].push_back(id);
  order["weak"] = json::array();
  for (const auto& [id, _] : m.weak) order["weak"].push_back(id);
  order["unlabeled"] = m.unlabeled;
  order["validation"] = json::array();
  for (const auto& [id, _] : m.validation) order["validation"].push_back(id);
  j["splits"] = order;

  std::ofstream f(root / "manifest.json");
  if (!f) throw IoError("cannot write manifest in " + m.root_dir);
  f << j.dump(2) << '\n';
  if (!f) throw IoError("short write: manifest.json");
}

CorpusManifest load_manifest(const std::string& manifest_path) {
  std::ifstream f(manifest_path);
  if (!f) throw IoError("cannot open: " + manifest_path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw FormatError("bad manifest JSON: " + std::string(e.what()));
  }

  CorpusManifest m;
  m.root_dir = fs::path(manifest_path).parent_path().string();
  m.seed = j.at("seed").get<uint64_t>();
  m.clip_duration = j.at("clip_duration").get<double>();
  m.sample_rate = j.at("sample_rate").get<int>();
  m.class_names = j.at("class_names").get<std::vector<std::string>>();
  m.audio_dir = j.at("audio_dir").get<std::string>();

  const fs::path root(m.root_dir);
  EventMap strong_map = read_strong_tsv((root / j.at("strong_tsv").get<std::string>()).string(), m.class_names);
  auto weak_map = read_weak_tsv((root / j.at("weak_tsv").get<std::string>()).string(), m.class_names);
  EventMap val_map = read_strong_tsv((root / j.at("validation_tsv").get<std::string>()).string(), m.class_names);

  const json& splits = j.at("splits");
  for (const auto& id : splits.at("strong")) {
    auto it = strong_map.find(id.get<std::string>());
    m.strong.emplace_back(id.get<std::string>(), it == strong_map.end() ? EventList{} : it->second);
  }
  for (const auto& id : splits.at("weak")) {
    auto it = weak_map.find(id.get<std::string>());
    m.weak.emplace_back(id.get<std::string>(), it == weak_map.end() ? std::set<int>{} : it->second);
  }
  m.unlabeled = splits.at("unlabeled").get<std::vector<std::string>>();
  for (const auto& id : splits.at("validation")) {
    auto it = val_map.find(id.get<std::string>());
    m.validation.emplace_back(id.get<std::string>(), it == val_map.end() ? EventList{} : it->second);
  }
  return m;
}

}  // namespace sedkit
