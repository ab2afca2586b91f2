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

#include "fewshot/multiway.h"

#include <algorithm>
#include <string>

#include "fewshot/error.h"
#include "fewshot/parallel.h"

namespace fewshot {

MultiwaySplit::MultiwaySplit(SupportSet support, std::vector<LabeledVector> test)
    : support_(std::move(support)), test_(std::move(test)) {
  for (std::size_t i = 0; i < test_.size(); ++i) {
    if (!support_.Contains(test_[i].label)) {
      throw Error(ErrorCode::kZeroSupport,
                  "test class " + std::to_string(test_[i].label) +
                      " has no support records");
    }
    if (test_[i].vector.size() != support_.dimension()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "test record " + std::to_string(i) + " has dimension " +
                      std::to_string(test_[i].vector.size()));
    }
  }
}

double MacroAccuracy(const std::vector<ClassTally>& breakdown) {
  double sum = 0.0;
  std::size_t classes = 0;
  for (const auto& t : breakdown) {
    if (t.tested == 0) continue;
    sum += static_cast<double>(t.correct) / static_cast<double>(t.tested);
    ++classes;
  }
  return classes == 0 ? 0.0 : sum / static_cast<double>(classes);
}

double MicroAccuracy(const std::vector<ClassTally>& breakdown) {
  std::size_t correct = 0;
  std::size_t tested = 0;
  for (const auto& t : breakdown) {
    correct += t.correct;
    tested += t.tested;
  }
  return tested == 0 ? 0.0
                     : static_cast<double>(correct) / static_cast<double>(tested);
}

MultiwayReport EvaluateMultiway(const MultiwaySplit& split, const FeatureSet& base,
                                TransformKind kind, unsigned threads) {
  if (split.test().empty()) {
    throw Error(ErrorCode::kEmptySet, "multiway split has no test records");
  }
  const TransformState transform = FitTransform(kind, base);
  const NearestCentroidClassifier classifier(split.support(), transform);

  const auto& test = split.test();
  std::vector<ClassId> predicted(test.size());
  ParallelFor(test.size(), threads, [&](std::size_t i) {
    predicted[i] = classifier.Classify(test[i].vector);
  });

  MultiwayReport report;
  for (const auto& cls : split.support().classes()) {
    report.class_breakdown.push_back({cls.label, 0, 0});
  }
  std::sort(report.class_breakdown.begin(), report.class_breakdown.end(),
            [](const ClassTally& a, const ClassTally& b) { return a.label < b.label; });
  for (std::size_t i = 0; i < test.size(); ++i) {
    auto it = std::lower_bound(
        report.class_breakdown.begin(), report.class_breakdown.end(), test[i].label,
        [](const ClassTally& t, ClassId label) { return t.label < label; });
    ++it->tested;
    if (predicted[i] == test[i].label) ++it->correct;
  }
  report.per_class_accuracy = MacroAccuracy(report.class_breakdown);
  report.mean_accuracy = MicroAccuracy(report.class_breakdown);
  return report;
}

}  // namespace fewshot
