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

#ifndef FEWSHOT_FEATURES_H_
#define FEWSHOT_FEATURES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace fewshot {

using ClassId = std::uint32_t;

enum class SetRole { kBase, kValidation, kNovel };

// Minimum Euclidean norm a vector must exceed to be L2-normalized.
inline constexpr double kZeroNormThreshold = 1e-12;

// A labeled record borrowed from a FeatureSet.
struct FeatureRecord {
  ClassId label;
  std::span<const float> vector;
};

// Labeled dense float32 vectors sharing one dimension. Records are stored
// contiguously in insertion order. All values are finite.
class FeatureSet {
 public:
  explicit FeatureSet(std::size_t dimension, SetRole role = SetRole::kNovel);

  // Throws kDimensionMismatch or kNonFiniteValue.
  void Add(ClassId label, std::span<const float> vector);
  void Reserve(std::size_t records);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  SetRole role() const { return role_; }

  ClassId label(std::size_t i) const { return labels_[i]; }
  std::span<const float> vector(std::size_t i) const {
    return {values_.data() + i * dimension_, dimension_};
  }
  FeatureRecord record(std::size_t i) const { return {label(i), vector(i)}; }

  std::span<const ClassId> labels() const { return labels_; }
  std::span<const float> values() const { return values_; }

  // Distinct labels in ascending order.
  std::vector<ClassId> Classes() const;

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;

 private:
  std::size_t dimension_;
  SetRole role_;
  std::vector<ClassId> labels_;
  std::vector<float> values_;
};

enum class TransformKind { kUN, kL2N, kCL2N };

std::string_view TransformName(TransformKind kind);
// Accepts "un", "l2n", "cl2n" (case-insensitive).
std::optional<TransformKind> ParseTransform(std::string_view name);

// A fitted feature transform. The base mean is present iff kind is CL2N.
class TransformState {
 public:
  static TransformState Unnormalized() { return TransformState(TransformKind::kUN, {}); }
  static TransformState L2Normalized() { return TransformState(TransformKind::kL2N, {}); }
  // Throws kEmptySet if base_mean is empty or kNonFiniteValue.
  static TransformState Centered(std::vector<double> base_mean);

  TransformKind kind() const { return kind_; }
  // Empty unless kind() == kCL2N.
  std::span<const double> base_mean() const { return base_mean_; }
  bool has_base_mean() const { return !base_mean_.empty(); }

 private:
  TransformState(TransformKind kind, std::vector<double> mean)
      : kind_(kind), base_mean_(std::move(mean)) {}

  TransformKind kind_;
  std::vector<double> base_mean_;
};

// Example-weighted mean over every record of `base`, accumulated with
// Neumaier-compensated double sums. Throws kEmptySet.
std::vector<double> ComputeBaseMean(const FeatureSet& base);

// v / ||v||_2. Throws kZeroVector when ||v||_2 <= kZeroNormThreshold.
std::vector<double> L2Normalize(std::span<const double> v);

double L2Norm(std::span<const double> v);

// UN and L2N ignore `base`; CL2N requires it non-empty.
TransformState FitTransform(TransformKind kind, const FeatureSet& base);

// UN: v. L2N: L2Normalize(v). CL2N: L2Normalize(v - base_mean), subtracting
// first. Throws kDimensionMismatch or kZeroVector.
std::vector<double> ApplyTransform(const TransformState& state,
                                   std::span<const float> v);
std::vector<double> ApplyTransform(const TransformState& state,
                                   std::span<const double> v);

}  // namespace fewshot

#endif  // FEWSHOT_FEATURES_H_
