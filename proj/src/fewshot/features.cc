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

#include "fewshot/features.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "fewshot/error.h"

namespace fewshot {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

template <typename T>
std::vector<double> TransformImpl(const TransformState& state,
                                  std::span<const T> v) {
  std::vector<double> out(v.begin(), v.end());
  switch (state.kind()) {
    case TransformKind::kUN:
      return out;
    case TransformKind::kL2N:
      return L2Normalize(out);
    case TransformKind::kCL2N: {
      const auto mean = state.base_mean();
      if (mean.size() != v.size()) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "vector dimension " + std::to_string(v.size()) +
                        " does not match transform dimension " +
                        std::to_string(mean.size()));
      }
      for (std::size_t i = 0; i < out.size(); ++i) out[i] -= mean[i];
      return L2Normalize(out);
    }
  }
  return out;
}

}  // namespace

FeatureSet::FeatureSet(std::size_t dimension, SetRole role)
    : dimension_(dimension), role_(role) {
  if (dimension == 0) {
    throw Error(ErrorCode::kInvalidArgument, "feature dimension must be >= 1");
  }
}

void FeatureSet::Add(ClassId label, std::span<const float> vector) {
  if (vector.size() != dimension_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "record has dimension " + std::to_string(vector.size()) +
                    ", set has dimension " + std::to_string(dimension_));
  }
  for (float x : vector) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kNonFiniteValue,
                  "non-finite value in record " + std::to_string(size()));
    }
  }
  labels_.push_back(label);
  values_.insert(values_.end(), vector.begin(), vector.end());
}

void FeatureSet::Reserve(std::size_t records) {
  labels_.reserve(records);
  values_.reserve(records * dimension_);
}

std::vector<ClassId> FeatureSet::Classes() const {
  std::vector<ClassId> classes(labels_.begin(), labels_.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

std::string_view TransformName(TransformKind kind) {
  switch (kind) {
    case TransformKind::kUN: return "un";
    case TransformKind::kL2N: return "l2n";
    case TransformKind::kCL2N: return "cl2n";
  }
  return "un";
}

std::optional<TransformKind> ParseTransform(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "un") return TransformKind::kUN;
  if (lower == "l2n") return TransformKind::kL2N;
  if (lower == "cl2n") return TransformKind::kCL2N;
  return std::nullopt;
}

TransformState TransformState::Centered(std::vector<double> base_mean) {
  if (base_mean.empty()) {
    throw Error(ErrorCode::kEmptySet, "CL2N transform requires a base mean");
  }
  for (double x : base_mean) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kNonFiniteValue, "base mean is not finite");
    }
  }
  return TransformState(TransformKind::kCL2N, std::move(base_mean));
}

std::vector<double> ComputeBaseMean(const FeatureSet& base) {
  if (base.empty()) {
    throw Error(ErrorCode::kEmptySet, "cannot compute the mean of an empty set");
  }
  const std::size_t dim = base.dimension();
  std::vector<CompensatedSum> sums(dim);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto v = base.vector(i);
    for (std::size_t d = 0; d < dim; ++d) sums[d].Add(v[d]);
  }
  std::vector<double> mean(dim);
  const double n = static_cast<double>(base.size());
  for (std::size_t d = 0; d < dim; ++d) mean[d] = sums[d].value() / n;
  return mean;
}

double L2Norm(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

std::vector<double> L2Normalize(std::span<const double> v) {
  const double norm = L2Norm(v);
  if (!(norm > kZeroNormThreshold)) {
    throw Error(ErrorCode::kZeroVector,
                "cannot L2-normalize a vector with norm <= 1e-12");
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / norm;
  return out;
}

TransformState FitTransform(TransformKind kind, const FeatureSet& base) {
  switch (kind) {
    case TransformKind::kUN: return TransformState::Unnormalized();
    case TransformKind::kL2N: return TransformState::L2Normalized();
    case TransformKind::kCL2N:
      return TransformState::Centered(ComputeBaseMean(base));
  }
  return TransformState::Unnormalized();
}

std::vector<double> ApplyTransform(const TransformState& state,
                                   std::span<const float> v) {
  return TransformImpl(state, v);
}

std::vector<double> ApplyTransform(const TransformState& state,
                                   std::span<const double> v) {
  return TransformImpl(state, v);
}

}  // namespace fewshot
