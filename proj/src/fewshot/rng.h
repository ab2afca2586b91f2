// Copyright 2026 The fewshot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FEWSHOT_RNG_H_
#define FEWSHOT_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace fewshot {

// Stream tags separating the seed derivations of independent consumers.
// Episode streams use the episode index itself as the tag.
inline constexpr std::uint64_t kSyntheticStream = 0x73796E7468657469ULL;
inline constexpr std::uint64_t kCodebookStream = 0x636F6465626F6F6BULL;
inline constexpr std::uint64_t kEcocInitStream = 0x65636F63696E6974ULL;

// SplitMix64 output function.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  return Mix64(Mix64(seed) ^ stream);
}

// Deterministic random source with a pinned engine (std::mt19937_64) and
// hand-written distributions, so every draw sequence is reproducible across
// standard library implementations. The std:: distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, n) by rejection of the biased low range. n >= 1.
  std::uint64_t UniformIndex(std::uint64_t n);

  // Uniform in [0, 1) with 53 random bits.
  double UniformUnit() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * UniformUnit(); }

  // Box-Muller, cosine branch only; one standard normal per two draws.
  double Normal();

  bool Bit() { return (Next() >> 63) != 0; }

  // Partial Fisher-Yates: moves a uniform k-subset (in draw order) to the
  // front of `pool` and truncates it to size k.
  template <typename T>
  void SampleWithoutReplacement(std::vector<T>& pool, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::size_t>(UniformIndex(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fewshot

#endif  // FEWSHOT_RNG_H_
