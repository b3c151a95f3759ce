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

#ifndef SEDKIT_WAV_HPP_
#define SEDKIT_WAV_HPP_

#include <string>
#include <vector>

#include "sedkit/mat.hpp"

namespace sedkit {

// Mono waveform in [-1, 1].
struct AudioClip {
  std::vector<real> samples;
  int sample_rate = 0;
  std::string source_path;

  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

// RIFF/PCM16 mono. Samples are quantized with round-to-nearest and clamped.
void write_wav_pcm16(const std::string& path, const AudioClip& clip);
AudioClip read_wav_pcm16(const std::string& path);

}  // namespace sedkit

#endif  // SEDKIT_WAV_HPP_
