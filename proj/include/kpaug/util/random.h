// Copyright 2026 The Kpaug Authors.
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

#ifndef KPAUG_UTIL_RANDOM_H_
#define KPAUG_UTIL_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

namespace kpaug {

// Derives an independent seed for a named substream of `seed`, e.g.
// DeriveSeed(seed, {"kpd", doc_id, keyphrase}). Stable across platforms.
uint64_t DeriveSeed(uint64_t seed, std::initializer_list<std::string_view> names);

// Seeded generator with platform-independent draws. std::mt19937_64 is fully
// specified by the standard; the distributions below are implemented here
// rather than taken from <random>, whose outputs vary between libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double UniformDouble() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n); n must be positive.
  uint64_t UniformIndex(uint64_t n);

  bool Bernoulli(double p) { return UniformDouble() < p; }

  // k distinct indices from [0, n), in ascending order.
  std::vector<size_t> SampleWithoutReplacement(size_t n, size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace kpaug

#endif  // KPAUG_UTIL_RANDOM_H_
