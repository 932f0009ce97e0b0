// Copyright 2026 The geomgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace geomgate {

// splitmix64 finalizer; used to derive independent child streams from a
// (seed, tag...) tuple so parallel and serial evaluation orders agree.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(mix64(seed ^ 0x6a09e667f3bcc909ULL) + mix64(a) + 3 * mix64(b));
}

// Thin deterministic wrapper over mt19937_64. std::uniform_*_distribution is
// implementation-defined, so bounded draws and variates are done by hand to
// keep run manifests byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, n). Modulo bias is < 2^-59 for n < 2^5 range used here.
  std::uint64_t next_below(std::uint64_t n) { return eng_() % n; }

  // Uniform double in [0, 1).
  double next_double() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  bool next_bernoulli(double p) { return next_double() < p; }

  long binomial(long n, double p) {
    long k = 0;
    for (long i = 0; i < n; ++i) k += next_bernoulli(p) ? 1 : 0;
    return k;
  }

  double next_gaussian() {
    // Box-Muller; one value per call keeps the stream layout simple.
    double u1 = 0.0;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace geomgate
