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

#include "sedkit/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "sedkit/error.hpp"

namespace sedkit {

namespace {

void put_u32(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

uint32_t get_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t get_u16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

void write_wav_pcm16(const std::string& path, const AudioClip& clip) {
  const uint32_t n = static_cast<uint32_t>(clip.samples.size());
  const uint32_t data_bytes = n * 2;
  std::string buf;
  buf.reserve(44 + data_bytes);
  buf += "RIFF";
  put_u32(buf, 36 + data_bytes);
  buf += "WAVE";
  buf += "fmt ";
  put_u32(buf, 16);
  put_u16(buf, 1);  // PCM
  put_u16(buf, 1);  // mono
  put_u32(buf, static_cast<uint32_t>(clip.sample_rate));
  put_u32(buf, static_cast<uint32_t>(clip.sample_rate) * 2);
  put_u16(buf, 2);   // block align
  put_u16(buf, 16);  // bits per sample
  buf += "data";
  put_u32(buf, data_bytes);
  for (uint32_t i = 0; i < n; ++i) {
    double x = std::clamp(static_cast<double>(clip.samples[i]), -1.0, 1.0);
    int v = static_cast<int>(std::lround(x * 32767.0));
    put_u16(buf, static_cast<uint16_t>(static_cast<int16_t>(v)));
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!f) throw IoError("short write: " + path);
}

AudioClip read_wav_pcm16(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path);
  std::string raw((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  const unsigned char* p = reinterpret_cast<const unsigned char*>(raw.data());
  if (raw.size() < 44 || std::memcmp(p, "RIFF", 4) != 0 || std::memcmp(p + 8, "WAVE", 4) != 0)
    throw FormatError("not a RIFF/WAVE file: " + path);

  AudioClip clip;
  clip.source_path = path;
  size_t pos = 12;
  bool have_fmt = false;
  while (pos + 8 <= raw.size()) {
    const char* id = raw.data() + pos;
    uint32_t sz = get_u32(p + pos + 4);
    size_t body = pos + 8;
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (body + 16 > raw.size()) throw FormatError("truncated fmt chunk: " + path);
      uint16_t format = get_u16(p + body);
      uint16_t channels = get_u16(p + body + 2);
      uint32_t rate = get_u32(p + body + 4);
      uint16_t bits = get_u16(p + body + 14);
      if (format != 1 || bits != 16) throw FormatError("expected PCM16: " + path);
      if (channels != 1) throw FormatError("expected mono: " + path);
      clip.sample_rate = static_cast<int>(rate);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      if (!have_fmt) throw FormatError("data chunk before fmt: " + path);
      if (body + sz > raw.size()) throw FormatError("truncated data chunk: " + path);
      size_t n = sz / 2;
      clip.samples.resize(n);
      for (size_t i = 0; i < n; ++i) {
        int16_t v = static_cast<int16_t>(get_u16(p + body + 2 * i));
        clip.samples[i] = static_cast<real>(v) / static_cast<real>(32767.0);
      }
      return clip;
    }
    pos = body + sz + (sz & 1);  // chunks are word-aligned
  }
  throw FormatError("no data chunk: " + path);
}

}  // namespace sedkit
