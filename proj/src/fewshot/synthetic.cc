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

#include "fewshot/synthetic.h"

#include <cmath>
#include <vector>

#include "fewshot/error.h"
#include "fewshot/rng.h"

namespace fewshot {

void SyntheticSpec::Validate() const {
  if (num_classes < 2) {
    throw Error(ErrorCode::kInvalidArgument, "synthetic data needs at least 2 classes");
  }
  if (dimension < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  if (records_per_class < 1) {
    throw Error(ErrorCode::kInvalidArgument, "records per class must be >= 1");
  }
  const auto non_negative = [](double x) { return std::isfinite(x) && x >= 0.0; };
  if (!non_negative(class_spread) || !non_negative(within_spread) ||
      !non_negative(offset_norm)) {
    throw Error(ErrorCode::kInvalidArgument,
                "spreads and offset norm must be finite and >= 0");
  }
}

std::optional<SyntheticSpec> SyntheticPreset(std::string_view name) {
  if (name == "centering-benefit") {
    SyntheticSpec spec;
    spec.num_classes = 20;
    spec.dimension = 64;
    spec.records_per_class = 100;
    spec.class_spread = 1.0;
    spec.within_spread = 0.5;
    spec.offset_norm = 50.0;
    spec.seed = 42;
    return spec;
  }
  return std::nullopt;
}

SyntheticData GenerateSynthetic(const SyntheticSpec& spec) {
  spec.Validate();
  const std::size_t dim = spec.dimension;
  const std::size_t base_classes = spec.num_classes / 2;
  SyntheticData data{FeatureSet(dim, SetRole::kBase), FeatureSet(dim, SetRole::kNovel)};
  data.base.Reserve(base_classes * spec.records_per_class);
  data.novel.Reserve((spec.num_classes - base_classes) * spec.records_per_class);

  Rng rng(DeriveSeed(spec.seed, kSyntheticStream));
  const double direction = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<double> mean(dim);
  std::vector<float> record(dim);
  for (std::size_t c = 0; c < spec.num_classes; ++c) {
    for (auto& m : mean) m = spec.offset_norm * direction + spec.class_spread * rng.Normal();
    FeatureSet& target = c < base_classes ? data.base : data.novel;
    for (std::size_t r = 0; r < spec.records_per_class; ++r) {
      for (std::size_t d = 0; d < dim; ++d) {
        record[d] = static_cast<float>(mean[d] + spec.within_spread * rng.Normal());
      }
      target.Add(static_cast<ClassId>(c), record);
    }
  }
  return data;
}

}  // namespace fewshot
