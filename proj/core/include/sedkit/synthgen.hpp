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

#ifndef SEDKIT_SYNTHGEN_HPP_
#define SEDKIT_SYNTHGEN_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sedkit/events.hpp"
#include "sedkit/wav.hpp"

namespace sedkit {

enum class EventKind { kTone, kChirp, kNoiseBurst, kAmTone };

// One synthesizable event class. Base frequencies of distinct classes are
// spaced at least 500 Hz apart so classes stay spectrally separable.
struct EventTemplate {
  int class_id = 0;
  EventKind kind = EventKind::kTone;
  std::string name;
  double base_frequency = 0.0;  // Hz
  double min_duration = 0.0;    // seconds
  double max_duration = 0.0;
};

enum class Background { kSilence, kPinkNoise };

// Fully determines a corpus: (seed, clip_index) -> identical bytes.
struct SoundscapeSpec {
  uint64_t seed = 0;
  double clip_duration = 10.0;  // seconds
  int min_events = 1;
  int max_events = 3;
  double snr_db_lo = 6.0;
  double snr_db_hi = 20.0;
  Background background = Background::kPinkNoise;
  int n_classes = 10;  // first n of the builtin templates
  int sample_rate = 44100;

  void validate() const;  // throws ConfigError
};

// The ten builtin class templates (tones, chirps, band noise, AM tones with
// disjoint base frequencies below 7 kHz). n_classes selects a prefix.
std::vector<EventTemplate> builtin_templates(int n_classes);
std::vector<std::string> builtin_class_names(int n_classes);

// Render one clip. Pure in (spec, clip_index); background noise, event
// choice, placement and phases all derive from the pair.
std::pair<AudioClip, EventList> render_clip(const SoundscapeSpec& spec, int clip_index);

// Corpus layout on disk plus loaded annotations. Paths inside the struct are
// relative to root_dir.
struct CorpusManifest {
  uint64_t seed = 0;
  double clip_duration = 0.0;
  int sample_rate = 44100;
  std::vector<std::string> class_names;
  std::string root_dir;
  std::string audio_dir = "audio";

  std::vector<std::pair<std::string, EventList>> strong;    // clip id -> events
  std::vector<std::pair<std::string, std::set<int>>> weak;  // clip id -> class set
  std::vector<std::string> unlabeled;                       // clip ids
  std::vector<std::pair<std::string, EventList>> validation;

  std::string wav_path(const std::string& clip_id) const;
  std::vector<std::string> all_clip_ids() const;   // training splits only
  std::vector<std::string> train_clip_ids() const { return all_clip_ids(); }
  int n_classes() const { return static_cast<int>(class_names.size()); }
};

// Render n_strong + n_weak + n_unlabeled (+ n_validation held-out) clips into
// out_dir, write the WAVs, the three label files and manifest.json. Weak
// labels are the timestamp-erased projection of the rendered ground truth.
CorpusManifest emit_corpus(const SoundscapeSpec& spec, int n_strong, int n_weak, int n_unlabeled,
                           const std::string& out_dir, int n_validation = 0);

void save_manifest(const CorpusManifest& manifest);  // root_dir/manifest.json
CorpusManifest load_manifest(const std::string& manifest_path);

}  // namespace sedkit

#endif  // SEDKIT_SYNTHGEN_HPP_
