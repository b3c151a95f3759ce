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

#include "sedkit/audiofeat.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include <nlohmann/json.hpp>

#include "sedkit/error.hpp"

using nlohmann::json;

namespace sedkit {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

// --- resampler -------------------------------------------------------------

constexpr int kUp = 160;     // 44100 * 160 / 441 = 16000
constexpr int kDown = 441;
constexpr int kTapsPerPhase = 64;
constexpr double kCutoffHz = 7200.0;
constexpr double kKaiserBeta = 9.0;

double bessel_i0(double x) {
  // Series expansion; converges fast for the argument range we use.
  double sum = 1.0, term = 1.0;
  double half = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half / k) * (half / k);
    sum += term;
    if (term < sum * 1e-21) break;
  }
  return sum;
}

// Prototype lowpass split into kUp phase filters of kTapsPerPhase taps.
const std::vector<std::vector<double>>& phase_filters() {
  static const std::vector<std::vector<double>> filters = [] {
    const int n_taps = kUp * kTapsPerPhase;
    const double center = (n_taps - 1) / 2.0;
    const double fs_up = 44100.0 * kUp;
    const double fc = kCutoffHz / fs_up;  // cycles per upsampled sample
    const double i0_beta = bessel_i0(kKaiserBeta);

    std::vector<double> proto(n_taps);
    for (int n = 0; n < n_taps; ++n) {
      double m = n - center;
      double x = 2.0 * fc * m;
      double sinc = x == 0.0 ? 1.0 : std::sin(kPi * x) / (kPi * x);
      double w_arg = 2.0 * n / (n_taps - 1.0) - 1.0;
      double window = bessel_i0(kKaiserBeta * std::sqrt(std::max(0.0, 1.0 - w_arg * w_arg))) / i0_beta;
      proto[n] = 2.0 * fc * kUp * sinc * window;
    }
    std::vector<std::vector<double>> out(kUp, std::vector<double>(kTapsPerPhase));
    for (int p = 0; p < kUp; ++p)
      for (int k = 0; k < kTapsPerPhase; ++k) out[p][k] = proto[p + k * kUp];
    return out;
  }();
  return filters;
}

}  // namespace

AudioClip resample_to_16k(const AudioClip& clip) {
  if (clip.sample_rate == 16000) return clip;
  if (clip.sample_rate != 44100)
    throw FormatError("resample_to_16k expects 44100 or 16000 Hz input, got " +
                      std::to_string(clip.sample_rate));

  const auto& filters = phase_filters();
  const int64_t in_len = static_cast<int64_t>(clip.samples.size());
  const int64_t out_len = (in_len * kUp + kDown / 2) / kDown;
  const int64_t group_delay = static_cast<int64_t>(kUp) * kTapsPerPhase / 2;

  AudioClip out;
  out.sample_rate = 16000;
  out.source_path = clip.source_path;
  out.samples.resize(static_cast<size_t>(out_len));

  for (int64_t j = 0; j < out_len; ++j) {
    const int64_t t = j * kDown + group_delay;  // position on the upsampled grid
    const int phase = static_cast<int>(t % kUp);
    const int64_t base = t / kUp;
    const std::vector<double>& h = filters[phase];
    double acc = 0.0;
    for (int k = 0; k < kTapsPerPhase; ++k) {
      int64_t i = base - k;
      if (i >= 0 && i < in_len) acc += h[k] * static_cast<double>(clip.samples[i]);
    }
    out.samples[j] = static_cast<real>(acc);
  }
  return out;
}

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw UsageError("fft size must be a power of two");

  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

namespace {

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

// Area of the triangle (f_lo, f_mid, f_hi) over the interval [a, b].
double triangle_mass(double f_lo, double f_mid, double f_hi, double a, double b) {
  auto ramp_up = [&](double x0, double x1) {
    // integral of (f - f_lo)/(f_mid - f_lo) over [x0, x1]
    if (f_mid <= f_lo) return 0.0;
    double m0 = (x0 - f_lo), m1 = (x1 - f_lo);
    return (m1 * m1 - m0 * m0) / (2.0 * (f_mid - f_lo));
  };
  auto ramp_down = [&](double x0, double x1) {
    if (f_hi <= f_mid) return 0.0;
    double m0 = (f_hi - x1), m1 = (f_hi - x0);
    return (m1 * m1 - m0 * m0) / (2.0 * (f_hi - f_mid));
  };
  double mass = 0.0;
  double lo = std::max(a, f_lo), hi = std::min(b, f_mid);
  if (hi > lo) mass += ramp_up(lo, hi);
  lo = std::max(a, f_mid);
  hi = std::min(b, f_hi);
  if (hi > lo) mass += ramp_down(lo, hi);
  return mass;
}

}  // namespace

Mat mel_filterbank(int n_mels, int n_fft, int sample_rate, double fmin, double fmax) {
  if (n_mels < 1 || n_fft < 4) throw ConfigError("bad mel filterbank config");
  const int n_bins = n_fft / 2 + 1;
  const double bin_hz = static_cast<double>(sample_rate) / n_fft;

  const double mel_lo = hz_to_mel(fmin);
  const double mel_hi = hz_to_mel(fmax);
  std::vector<double> edges(n_mels + 2);
  for (int i = 0; i < n_mels + 2; ++i)
    edges[i] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * i / (n_mels + 1));

  Mat bank(n_mels, n_bins, 0);
  for (int b = 0; b < n_mels; ++b) {
    double f_lo = edges[b], f_mid = edges[b + 1], f_hi = edges[b + 2];
    for (int k = 0; k < n_bins; ++k) {
      // Cell of bin k covers [k-1/2, k+1/2] bins; average the triangle there.
      double a = (k - 0.5) * bin_hz;
      double c = (k + 0.5) * bin_hz;
      bank(b, k) = static_cast<real>(triangle_mass(f_lo, f_mid, f_hi, a, c) / bin_hz);
    }
  }
  return bank;
}

void FeatureConfig::validate() const {
  if (sample_rate <= 0 || n_fft < 4 || hop <= 0 || n_mels < 1) throw ConfigError("bad feature config");
  if ((n_fft & (n_fft - 1)) != 0) throw ConfigError("n_fft must be a power of two");
  if (pad_to_seconds <= 0) throw ConfigError("pad_to_seconds must be positive");
  if (!(fmin >= 0) || fmax <= fmin || fmax > sample_rate / 2.0 + 1e-9)
    throw ConfigError("bad mel frequency range");
  if (log_eps <= 0) throw ConfigError("log_eps must be positive");
}

int64_t FeatureConfig::padded_samples() const {
  return static_cast<int64_t>(std::llround(pad_to_seconds * sample_rate));
}

int FeatureConfig::frames() const { return static_cast<int>(padded_samples() / hop) + 1; }

FeatureMap extract_logmel(const AudioClip& clip, const FeatureConfig& cfg) {
  cfg.validate();
  if (clip.samples.empty()) throw FormatError("empty clip");
  if (clip.sample_rate != cfg.sample_rate)
    throw FormatError("clip is at " + std::to_string(clip.sample_rate) + " Hz, expected " +
                      std::to_string(cfg.sample_rate));

  const int64_t padded = cfg.padded_samples();
  const int T = cfg.frames();
  const int n_bins = cfg.n_fft / 2 + 1;
  const int half = cfg.n_fft / 2;

  std::vector<double> window(cfg.n_fft);
  for (int i = 0; i < cfg.n_fft; ++i) window[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / cfg.n_fft);

  const Mat bank = mel_filterbank(cfg.n_mels, cfg.n_fft, cfg.sample_rate, cfg.fmin, cfg.fmax);

  FeatureMap out;
  out.frame_hop = cfg.hop;
  out.n_fft = cfg.n_fft;
  out.sample_rate = cfg.sample_rate;
  out.values = Mat(T, cfg.n_mels, 0);

  std::vector<std::complex<double>> buf(cfg.n_fft);
  std::vector<double> power(n_bins);
  auto sample_at = [&](int64_t i) -> double {
    // Zero padding to the nominal length and 256 samples each side for
    // centered framing; clips longer than the nominal length are truncated.
    if (i < 0 || i >= padded || i >= static_cast<int64_t>(clip.samples.size())) return 0.0;
    return static_cast<double>(clip.samples[i]);
  };

  for (int t = 0; t < T; ++t) {
    const int64_t center = static_cast<int64_t>(t) * cfg.hop;
    for (int i = 0; i < cfg.n_fft; ++i)
      buf[i] = std::complex<double>(sample_at(center - half + i) * window[i], 0.0);
    fft_inplace(buf);
    for (int k = 0; k < n_bins; ++k) power[k] = std::norm(buf[k]);
    for (int b = 0; b < cfg.n_mels; ++b) {
      double e = 0.0;
      for (int k = 0; k < n_bins; ++k) e += bank(b, k) * power[k];
      out.values(t, b) = static_cast<real>(std::log(e + cfg.log_eps));
    }
  }
  return out;
}

NormalizationStats fit_normalization(const std::vector<FeatureMap>& features) {
  if (features.empty()) throw UsageError("fit_normalization needs at least one feature map");

  long double sum = 0.0;
  int64_t count = 0;
  for (const FeatureMap& f : features) {
    for (real v : f.values.vec()) sum += v;
    count += static_cast<int64_t>(f.values.size());
  }
  if (count == 0) throw UsageError("fit_normalization: no entries");
  const double mean = static_cast<double>(sum / count);

  long double ssq = 0.0;
  for (const FeatureMap& f : features)
    for (real v : f.values.vec()) {
      long double d = static_cast<long double>(v) - mean;
      ssq += d * d;
    }
  const double std_dev = std::sqrt(static_cast<double>(ssq / count));
  if (std_dev < 1e-12 * std::max(1.0, std::abs(mean)))
    throw DataError("degenerate variance: all feature entries are identical");
  return {mean, std_dev, static_cast<int64_t>(features.size())};
}

Mat normalize(const Mat& values, const NormalizationStats& stats) {
  if (!(stats.std_dev > 0)) throw UsageError("normalization stats not fitted");
  Mat out = values;
  const real mean = static_cast<real>(stats.mean);
  const real inv = static_cast<real>(1.0 / stats.std_dev);
  for (real& v : out.vec()) v = (v - mean) * inv;
  return out;
}

FeatureMap normalize(const FeatureMap& map, const NormalizationStats& stats) {
  FeatureMap out = map;
  out.values = normalize(map.values, stats);
  return out;
}

namespace {

void put_u16(std::string& s, uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>(v >> 8));
}

void put_u32(std::string& s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f32(std::string& s, float v) {
  char b[4];
  std::memcpy(b, &v, 4);
  s.append(b, 4);
}

uint32_t get_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

}  // namespace

void write_feature_file(const std::string& path, const FeatureMap& map) {
  std::string buf;
  buf.reserve(12 + map.values.size() * 4);
  buf += "SEDF";
  put_u16(buf, 1);
  put_u32(buf, static_cast<uint32_t>(map.values.rows()));
  put_u32(buf, static_cast<uint32_t>(map.values.cols()));
  for (real v : map.values.vec()) put_f32(buf, static_cast<float>(v));
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!f) throw IoError("short write: " + path);
}

FeatureMap read_feature_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path);
  std::string raw((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  const unsigned char* p = reinterpret_cast<const unsigned char*>(raw.data());
  if (raw.size() < 14 || std::memcmp(p, "SEDF", 4) != 0) throw FormatError("not a feature file: " + path);
  uint16_t version = static_cast<uint16_t>(p[4] | (p[5] << 8));
  if (version != 1) throw FormatError("unsupported feature file version");
  uint32_t rows = get_u32(p + 6);
  uint32_t cols = get_u32(p + 10);
  if (raw.size() != 14 + static_cast<size_t>(rows) * cols * 4) throw FormatError("truncated feature file: " + path);
  FeatureMap out;
  out.values = Mat(static_cast<int>(rows), static_cast<int>(cols));
  const unsigned char* q = p + 14;
  for (size_t i = 0; i < static_cast<size_t>(rows) * cols; ++i) {
    float v;
    std::memcpy(&v, q + 4 * i, 4);
    out.values.vec()[i] = static_cast<real>(v);
  }
  return out;
}

void save_stats(const std::string& path, const NormalizationStats& stats) {
  json j;
  j["mean"] = stats.mean;
  j["std"] = stats.std_dev;
  j["n_clips"] = stats.n_clips;
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << j.dump(2) << '\n';
}

NormalizationStats load_stats(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open: " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw FormatError("bad stats JSON: " + std::string(e.what()));
  }
  NormalizationStats s;
  s.mean = j.at("mean").get<double>();
  s.std_dev = j.at("std").get<double>();
  s.n_clips = j.at("n_clips").get<int64_t>();
  return s;
}

}  // namespace sedkit
