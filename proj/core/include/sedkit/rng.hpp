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

#ifndef SEDKIT_RNG_HPP_
#define SEDKIT_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace sedkit {

// splitmix64 step, used to derive independent substream seeds.
inline uint64_t split_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Seeded generator. All randomness in the library flows through an explicitly
// seeded Rng so runs reproduce bit for bit. Draw helpers are hand-written
// because std:: distributions are implementation-specified.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

  uint64_t seed() const { return seed_; }

  // Independent substream, e.g. one per clip or per fold. Derived from the
  // construction seed, not the evolving engine state.
  Rng fork(uint64_t stream) const { return Rng(split_seed(seed_, stream)); }

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], inclusive, unbiased.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    if (hi <= lo) return lo;
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return lo + static_cast<int64_t>(x % span);
  }

  // Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Gamma(shape, 1) by Marsaglia-Tsang, with the shape < 1 boost.
  double gamma(double shape) {
    if (shape < 1.0) {
      double u;
      do {
        u = uniform();
      } while (u <= 0.0);
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Beta(a, b) via two gamma draws.
  double beta(double a, double b) {
    double x = gamma(a);
    double y = gamma(b);
    double s = x + y;
    return s > 0.0 ? x / s : 0.5;
  }

  template <typename It>
  void shuffle(It first, It last) {
    auto n = last - first;
    for (auto i = n - 1; i > 0; --i) {
      auto j = uniform_int(0, i);
      std::swap(first[i], first[j]);
    }
  }

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sedkit

#endif  // SEDKIT_RNG_HPP_
