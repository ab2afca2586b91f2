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

#include "fewshot/classifier.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fewshot/error.h"

namespace fewshot {
namespace {

template <typename T>
double DistanceImpl(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distance between vectors of dimension " +
                    std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

void CheckQuery(std::size_t expected, std::size_t actual) {
  if (expected != actual) {
    throw Error(ErrorCode::kDimensionMismatch,
                "query dimension " + std::to_string(actual) +
                    " does not match support dimension " +
                    std::to_string(expected));
  }
}

}  // namespace

void SupportSet::Add(ClassId label, std::vector<std::vector<float>> shots) {
  if (Contains(label)) {
    throw Error(ErrorCode::kDuplicateClass,
                "class " + std::to_string(label) + " already in support set");
  }
  if (shots.empty()) {
    throw Error(ErrorCode::kEmptySet,
                "class " + std::to_string(label) + " has no support shots");
  }
  const std::size_t dim = empty() ? shots.front().size() : dimension_;
  if (dim == 0) {
    throw Error(ErrorCode::kInvalidArgument, "support vectors must be non-empty");
  }
  for (const auto& shot : shots) {
    if (shot.size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "support shot of class " + std::to_string(label) +
                      " has dimension " + std::to_string(shot.size()) +
                      ", expected " + std::to_string(dim));
    }
  }
  dimension_ = dim;
  classes_.push_back({label, std::move(shots)});
}

bool SupportSet::Contains(ClassId label) const {
  return std::any_of(classes_.begin(), classes_.end(),
                     [&](const SupportClass& c) { return c.label == label; });
}

double EuclideanDistance(std::span<const double> a, std::span<const double> b) {
  return DistanceImpl(a, b);
}

double EuclideanDistance(std::span<const float> a, std::span<const float> b) {
  return DistanceImpl(a, b);
}

std::vector<Centroid> ClassCentroids(const SupportSet& support) {
  std::vector<Centroid> centroids;
  centroids.reserve(support.size());
  for (const auto& cls : support.classes()) {
    std::vector<double> sum(support.dimension(), 0.0);
    for (const auto& shot : cls.shots) {
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += shot[d];
    }
    const double k = static_cast<double>(cls.shots.size());
    for (double& x : sum) x /= k;
    centroids.push_back({cls.label, std::move(sum)});
  }
  return centroids;
}

NearestCentroidClassifier::NearestCentroidClassifier(const SupportSet& support,
                                                     TransformState transform)
    : transform_(std::move(transform)), dimension_(support.dimension()) {
  if (support.empty()) {
    throw Error(ErrorCode::kEmptySet, "support set is empty");
  }
  if (transform_.has_base_mean() &&
      transform_.base_mean().size() != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "transform dimension " +
                    std::to_string(transform_.base_mean().size()) +
                    " does not match support dimension " +
                    std::to_string(dimension_));
  }
  centroids_.reserve(support.size());
  for (const auto& cls : support.classes()) {
    std::vector<double> sum(dimension_, 0.0);
    for (const auto& shot : cls.shots) {
      const auto t = ApplyTransform(transform_, std::span<const float>(shot));
      for (std::size_t d = 0; d < dimension_; ++d) sum[d] += t[d];
    }
    const double k = static_cast<double>(cls.shots.size());
    for (double& x : sum) x /= k;
    centroids_.push_back({cls.label, std::move(sum)});
  }
  std::sort(centroids_.begin(), centroids_.end(),
            [](const Centroid& a, const Centroid& b) { return a.label < b.label; });
}

Prediction NearestCentroidClassifier::Predict(std::span<const float> query) const {
  CheckQuery(dimension_, query.size());
  const auto q = ApplyTransform(transform_, query);
  Prediction prediction;
  prediction.distances.reserve(centroids_.size());
  for (const auto& c : centroids_) {
    prediction.distances.push_back(
        {c.label, EuclideanDistance(std::span<const double>(q), c.vector)});
  }
  std::stable_sort(prediction.distances.begin(), prediction.distances.end(),
                   [](const ClassDistance& a, const ClassDistance& b) {
                     return a.distance < b.distance;
                   });
  prediction.predicted_class = prediction.distances.front().label;
  return prediction;
}

ClassId NearestCentroidClassifier::Classify(std::span<const float> query) const {
  CheckQuery(dimension_, query.size());
  const auto q = ApplyTransform(transform_, query);
  ClassId best = centroids_.front().label;
  double best_distance = std::numeric_limits<double>::infinity();
  for (const auto& c : centroids_) {
    const double d = EuclideanDistance(std::span<const double>(q), c.vector);
    if (d < best_distance) {
      best_distance = d;
      best = c.label;
    }
  }
  return best;
}

Prediction NearestCentroid(const SupportSet& support,
                           std::span<const float> query,
                           const TransformState& transform) {
  return NearestCentroidClassifier(support, transform).Predict(query);
}

ClassId NearestNeighbor(const SupportSet& support, std::span<const float> query) {
  if (support.empty()) {
    throw Error(ErrorCode::kEmptySet, "support set is empty");
  }
  CheckQuery(support.dimension(), query.size());
  ClassId best = 0;
  double best_distance = std::numeric_limits<double>::infinity();
  for (const auto& cls : support.classes()) {
    for (const auto& shot : cls.shots) {
      const double d = EuclideanDistance(query, std::span<const float>(shot));
      if (d < best_distance || (d == best_distance && cls.label < best)) {
        best_distance = d;
        best = cls.label;
      }
    }
  }
  return best;
}

}  // namespace fewshot
