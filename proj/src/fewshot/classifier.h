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

#ifndef FEWSHOT_CLASSIFIER_H_
#define FEWSHOT_CLASSIFIER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "fewshot/features.h"

namespace fewshot {

struct SupportClass {
  ClassId label;
  std::vector<std::vector<float>> shots;
};

// Labeled few-shot examples. Class ids are distinct, every class has at
// least one shot, and all shots share one dimension.
class SupportSet {
 public:
  SupportSet() = default;

  // Throws kDuplicateClass, kEmptySet (no shots) or kDimensionMismatch.
  void Add(ClassId label, std::vector<std::vector<float>> shots);

  const std::vector<SupportClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }
  std::size_t dimension() const { return dimension_; }
  bool Contains(ClassId label) const;

 private:
  std::vector<SupportClass> classes_;
  std::size_t dimension_ = 0;
};

struct ClassDistance {
  ClassId label;
  double distance;

  friend bool operator==(const ClassDistance&, const ClassDistance&) = default;
};

struct Prediction {
  ClassId predicted_class;
  // Ascending by distance, then by class id.
  std::vector<ClassDistance> distances;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

struct Centroid {
  ClassId label;
  std::vector<double> vector;
};

// ||a - b||_2 in double precision. Throws kDimensionMismatch.
double EuclideanDistance(std::span<const double> a, std::span<const double> b);
double EuclideanDistance(std::span<const float> a, std::span<const float> b);

// Componentwise mean of each class's raw shots, in support order.
std::vector<Centroid> ClassCentroids(const SupportSet& support);

// Nearest-centroid rule over transformed features. Each shot is transformed
// first, the transformed shots are averaged (the average is not
// re-normalized), and the transformed query is assigned to the closest
// centroid. Ties go to the smallest class id.
class NearestCentroidClassifier {
 public:
  NearestCentroidClassifier(const SupportSet& support, TransformState transform);

  Prediction Predict(std::span<const float> query) const;
  ClassId Classify(std::span<const float> query) const;

  const std::vector<Centroid>& centroids() const { return centroids_; }
  const TransformState& transform() const { return transform_; }

 private:
  TransformState transform_;
  std::size_t dimension_;
  // Sorted by class id so that a strict '<' scan implements the tie rule.
  std::vector<Centroid> centroids_;
};

Prediction NearestCentroid(const SupportSet& support,
                           std::span<const float> query,
                           const TransformState& transform);

// One-shot nearest-neighbor rule over the raw shots: the label of the single
// closest shot, ties to the smallest class id.
ClassId NearestNeighbor(const SupportSet& support, std::span<const float> query);

}  // namespace fewshot

#endif  // FEWSHOT_CLASSIFIER_H_
