// Copyright 2026 The VBP Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VBP_RNG_H_
#define VBP_RNG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "vbp/check.h"

namespace vbp {

// SplitMix64 step; used both as a generator and to mix seed components.
inline uint64_t SplitMix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Combines seed components into one stream key. Order-sensitive.
inline uint64_t MixSeed(uint64_t a, uint64_t b) {
  uint64_t s = a;
  uint64_t m = SplitMix64(s) ^ (b + 0x9e3779b97f4a7c15ULL);
  return SplitMix64(m);
}

// Deterministic, platform-independent random stream. All randomness in the
// workbench flows through this so runs are bit-reproducible given a seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // Warm up so nearby seeds diverge immediately.
    SplitMix64(state_);
  }

  uint64_t NextUint64() { return SplitMix64(state_); }

  // Uniform in [0, 1) with 53-bit resolution.
  double NextDouble() {
    return static_cast<double>(NextUint64() >> 11) * 0x1.0p-53;
  }

  bool NextBernoulli(double p) { return NextDouble() < p; }

  // Uniform integer in [0, n).
  int NextIndex(int n) {
    VBP_CHECK_GT(n, 0);
    return static_cast<int>(NextUint64() % static_cast<uint64_t>(n));
  }

  // Draws an index from an (unnormalized) non-negative weight vector.
  int NextCategorical(const std::vector<double>& weights) {
    VBP_CHECK(!weights.empty());
    double total = 0;
    for (double w : weights) total += w;
    VBP_CHECK_GT(total, 0);
    double u = NextDouble() * total;
    double acc = 0;
    for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    return static_cast<int>(weights.size()) - 1;
  }

 private:
  uint64_t state_;
};

// FNV-1a hash; stable across platforms and runs (std::hash is not pinned).
inline uint64_t StableHash(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace vbp

#endif  // VBP_RNG_H_
