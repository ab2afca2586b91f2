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

#ifndef FEWSHOT_MULTIWAY_H_
#define FEWSHOT_MULTIWAY_H_

#include <cstddef>
#include <vector>

#include "fewshot/classifier.h"
#include "fewshot/episodic.h"
#include "fewshot/features.h"

namespace fewshot {

// All-way evaluation split with per-class shot counts. Every test label is a
// support class.
class MultiwaySplit {
 public:
  // Throws kZeroSupport if a test label has no support entry.
  MultiwaySplit(SupportSet support, std::vector<LabeledVector> test);

  const SupportSet& support() const { return support_; }
  const std::vector<LabeledVector>& test() const { return test_; }

 private:
  SupportSet support_;
  std::vector<LabeledVector> test_;
};

struct ClassTally {
  ClassId label;
  std::size_t tested;
  std::size_t correct;

  friend bool operator==(const ClassTally&, const ClassTally&) = default;
};

struct MultiwayReport {
  // Unweighted mean of per-class accuracy over classes with test records.
  double per_class_accuracy = 0.0;
  // Total correct over total tested.
  double mean_accuracy = 0.0;
  // One entry per support class in ascending id order; classes without test
  // records appear with zero counts and are left out of both aggregates.
  std::vector<ClassTally> class_breakdown;
};

// Classifies every test record against all support classes at once.
// Throws kEmptySet when the split has no test records.
MultiwayReport EvaluateMultiway(const MultiwaySplit& split, const FeatureSet& base,
                                TransformKind kind, unsigned threads = 1);

// Aggregates recomputed from a breakdown.
double MacroAccuracy(const std::vector<ClassTally>& breakdown);
double MicroAccuracy(const std::vector<ClassTally>& breakdown);

}  // namespace fewshot

#endif  // FEWSHOT_MULTIWAY_H_
