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

#ifndef FEWSHOT_ECOC_H_
#define FEWSHOT_ECOC_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fewshot/features.h"

namespace fewshot {

// Smallest B with 2^B >= num_classes.
std::size_t MinimumCodeLength(std::size_t num_classes);

// C x B class codes. Rows built from bits are binary and pairwise distinct;
// rows appended with ExtendCodebook may hold real values in [0, 1].
class Codebook {
 public:
  // Throws kCodeTooShort, kDuplicateClass, kLengthMismatch, kInvalidArgument
  // (bit values other than 0/1) or kCodebookCollision (repeated row).
  static Codebook FromBits(std::vector<ClassId> class_ids,
                           const std::vector<std::vector<std::uint8_t>>& rows);

  std::size_t num_classes() const { return class_ids_.size(); }
  std::size_t bits() const { return bits_; }
  ClassId class_id(std::size_t row) const { return class_ids_[row]; }
  const std::vector<ClassId>& class_ids() const { return class_ids_; }
  std::span<const double> row(std::size_t r) const {
    return {codes_.data() + r * bits_, bits_};
  }
  std::optional<std::size_t> IndexOf(ClassId label) const;
  // True when every entry is exactly 0 or 1.
  bool is_binary() const;

  friend bool operator==(const Codebook&, const Codebook&) = default;

 private:
  friend Codebook ExtendCodebook(const Codebook&, ClassId, std::span<const double>);

  std::vector<ClassId> class_ids_;
  std::size_t bits_ = 0;
  std::vector<double> codes_;
};

// Uniform random bits for class ids 0..C-1. A row equal to an earlier row is
// redrawn, up to 1000 attempts per row (then kCodebookCollision). The stream
// is an std::mt19937_64 seeded with DeriveSeed(seed, kCodebookStream), one
// draw per bit (the top bit), row-major. Throws kCodeTooShort.
Codebook RandomCodebook(std::size_t num_classes, std::size_t bits,
                        std::uint64_t seed);

// Row index minimizing sum_b |predicted_b - row_b|, ties to the lowest index.
// Throws kLengthMismatch.
std::size_t DecodeRow(const Codebook& codebook, std::span<const double> predicted);
ClassId Decode(const Codebook& codebook, std::span<const double> predicted);

// Alternative decoder: maps codes and prediction to [-1, 1] via 2x - 1 and
// picks the row with the largest cosine similarity, ties to the lowest index.
ClassId DecodeCosine(const Codebook& codebook, std::span<const double> predicted);

// 1 where value >= threshold. Not used by the decoders.
std::vector<std::uint8_t> ThresholdCode(std::span<const double> code,
                                        double threshold = 0.5);

// Minimum pairwise Hamming distance between rows of a binary codebook.
std::size_t MinimumPairwiseDistance(const Codebook& codebook);

// Adds a (possibly soft) row for a new class. Throws kDuplicateClass,
// kLengthMismatch, or kInvalidArgument for values outside [0, 1].
Codebook ExtendCodebook(const Codebook& codebook, ClassId new_class,
                        std::span<const double> code);

// Linear multi-bit predictor: code_b = sigmoid(sum_d x_d * W[d][b] + bias_b).
class EcocModel {
 public:
  // Zero weights and biases.
  EcocModel(std::size_t dimension, std::size_t bits);
  // weights are row-major D x B. Throws kLengthMismatch or kNonFiniteValue.
  EcocModel(std::size_t dimension, std::size_t bits, std::vector<double> weights,
            std::vector<double> biases);

  std::size_t dimension() const { return dimension_; }
  std::size_t bits() const { return bits_; }
  double weight(std::size_t d, std::size_t b) const { return weights_[d * bits_ + b]; }
  std::span<const double> weights() const { return weights_; }
  std::span<const double> biases() const { return biases_; }

  friend bool operator==(const EcocModel&, const EcocModel&) = default;

 private:
  friend class EcocTrainer;

  std::size_t dimension_;
  std::size_t bits_;
  std::vector<double> weights_;
  std::vector<double> biases_;
};

double Sigmoid(double z);

// Throws kDimensionMismatch.
std::vector<double> PredictCode(const EcocModel& model, std::span<const float> x);

// Mean of the per-shot predicted codes. Throws kEmptySet or kDimensionMismatch.
std::vector<double> SoftCode(const EcocModel& model,
                             std::span<const std::vector<float>> shots);

struct LossGradient {
  double loss = 0.0;
  std::vector<double> weight_gradient;  // row-major D x B
  std::vector<double> bias_gradient;
};

// Summed binary cross-entropy of every bit of every example against its
// class row, and its gradient. Throws kUnknownLabel or kDimensionMismatch.
LossGradient EcocLossGradient(const EcocModel& model, const FeatureSet& train,
                              const Codebook& codebook);
double EcocLoss(const EcocModel& model, const FeatureSet& train,
                const Codebook& codebook);

struct TrainResult {
  EcocModel model;
  // loss_trace[e] is the loss before update e; the last entry is the loss of
  // the returned model, so the trace has epochs + 1 entries.
  std::vector<double> loss_trace;
};

// Full-batch gradient descent with a fixed rate. Weights and biases start
// uniform in [-0.01, 0.01] from DeriveSeed(seed, kEcocInitStream), weights
// row-major first. Throws kInvalidArgument, kUnknownLabel, kEmptySet or
// kNonFiniteLoss.
TrainResult TrainLinearEcoc(const FeatureSet& train, const Codebook& codebook,
                            double learning_rate, std::uint32_t epochs,
                            std::uint64_t seed);

}  // namespace fewshot

#endif  // FEWSHOT_ECOC_H_
