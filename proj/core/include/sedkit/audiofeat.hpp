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

#ifndef SEDKIT_AUDIOFEAT_HPP_
#define SEDKIT_AUDIOFEAT_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "sedkit/mat.hpp"
#include "sedkit/wav.hpp"

namespace sedkit {

// Log-mel front end parameters. Defaults give a 10 s clip at 16 kHz framed
// into 628 frames of 128 mel bands; tests shrink them.
struct FeatureConfig {
  int sample_rate = 16000;
  int n_fft = 512;
  int hop = 255;
  int n_mels = 128;
  double pad_to_seconds = 10.0;
  double fmin = 0.0;
  double fmax = 8000.0;
  double log_eps = 1e-10;

  void validate() const;
  int64_t padded_samples() const;
  int frames() const;  // floor(padded_samples / hop) + 1, centered framing
};

// T x F matrix of log-mel energies for one clip.
struct FeatureMap {
  Mat values;
  int frame_hop = 0;
  int n_fft = 0;
  int sample_rate = 0;
};

// Global scalar mean/std over every entry of the training feature maps.
struct NormalizationStats {
  double mean = 0.0;
  double std_dev = 0.0;
  int64_t n_clips = 0;
};

// Rational 160/441 polyphase resampler (windowed-sinc, Kaiser window,
// 64 taps per phase, 7.2 kHz cutoff). 16 kHz input passes through.
AudioClip resample_to_16k(const AudioClip& clip);

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse = false);

// Mel filter bank, n_mels x (n_fft/2 + 1), HTK mel scale. Triangles are
// integrated across each FFT bin cell so every row keeps positive mass even
// where the mel spacing drops below the bin width.
Mat mel_filterbank(int n_mels, int n_fft, int sample_rate, double fmin, double fmax);

// Hann window -> FFT -> power spectrum -> mel -> log(. + eps). The clip is
// zero padded (or truncated) to pad_to_seconds before framing.
FeatureMap extract_logmel(const AudioClip& clip, const FeatureConfig& cfg = {});

// Two-pass global statistics over all entries of all maps.
NormalizationStats fit_normalization(const std::vector<FeatureMap>& features);

FeatureMap normalize(const FeatureMap& map, const NormalizationStats& stats);
Mat normalize(const Mat& values, const NormalizationStats& stats);

// Feature file: "SEDF", version u16, T u32, F u32, row-major f32 LE.
void write_feature_file(const std::string& path, const FeatureMap& map);
FeatureMap read_feature_file(const std::string& path);

void save_stats(const std::string& path, const NormalizationStats& stats);
NormalizationStats load_stats(const std::string& path);

}  // namespace sedkit

#endif  // SEDKIT_AUDIOFEAT_HPP_
