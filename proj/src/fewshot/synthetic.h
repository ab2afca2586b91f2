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

#ifndef FEWSHOT_SYNTHETIC_H_
#define FEWSHOT_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "fewshot/features.h"

namespace fewshot {

// Gaussian mixture with a shared offset. Class means are
//   offset_norm * u + N(0, class_spread^2 I),  u = (1, ..., 1) / sqrt(D),
// and records are class mean + N(0, within_spread^2 I), stored as float32.
struct SyntheticSpec {
  std::size_t num_classes = 20;
  std::size_t dimension = 64;
  std::size_t records_per_class = 100;
  double class_spread = 1.0;
  double within_spread = 0.5;
  double offset_norm = 0.0;
  std::uint64_t seed = 0;

  // Throws kInvalidArgument.
  void Validate() const;
};

// "centering-benefit": 20 classes (10 base + 10 novel), D = 64,
// 100 records per class, offset norm 50, class spread 1, within spread 0.5,
// seed 42.
std::optional<SyntheticSpec> SyntheticPreset(std::string_view name);

struct SyntheticData {
  FeatureSet base;
  FeatureSet novel;
};

// Class c is labeled c. The first num_classes / 2 classes form the base set,
// the rest the novel set. One std::mt19937_64 seeded with
// DeriveSeed(seed, kSyntheticStream) draws, per class in order, the D mean
// coordinates and then each record's D coordinates.
SyntheticData GenerateSynthetic(const SyntheticSpec& spec);

}  // namespace fewshot

#endif  // FEWSHOT_SYNTHETIC_H_
