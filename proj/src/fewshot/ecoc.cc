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

#include "fewshot/ecoc.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fewshot/error.h"
#include "fewshot/rng.h"

namespace fewshot {
namespace {

constexpr int kMaxRowAttempts = 1000;

void CheckCodeLength(std::size_t num_classes, std::size_t bits) {
  const std::size_t minimum = MinimumCodeLength(num_classes);
  if (bits < minimum || bits == 0) {
    throw Error(ErrorCode::kCodeTooShort,
                std::to_string(num_classes) + " classes need at least " +
                    std::to_string(std::max<std::size_t>(minimum, 1)) +
                    " bits (ceil(log2(" + std::to_string(num_classes) +
                    "))), got " + std::to_string(bits));
  }
}

void CheckPredictedLength(const Codebook& codebook, std::size_t length) {
  if (length != codebook.bits()) {
    throw Error(ErrorCode::kLengthMismatch,
                "predicted code has " + std::to_string(length) +
                    " bits, codebook has " + std::to_string(codebook.bits()));
  }
}

// log(1 + exp(z)) - t * z, stable for large |z|.
double BinaryCrossEntropyWithLogit(double z, double target) {
  return std::max(z, 0.0) - target * z + std::log1p(std::exp(-std::abs(z)));
}

}  // namespace

std::size_t MinimumCodeLength(std::size_t num_classes) {
  std::size_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < num_classes) ++bits;
  return bits;
}

Codebook Codebook::FromBits(std::vector<ClassId> class_ids,
                            const std::vector<std::vector<std::uint8_t>>& rows) {
  if (class_ids.size() != rows.size()) {
    throw Error(ErrorCode::kLengthMismatch, "class id count does not match row count");
  }
  if (rows.empty()) throw Error(ErrorCode::kEmptySet, "codebook has no rows");
  Codebook book;
  book.bits_ = rows.front().size();
  CheckCodeLength(rows.size(), book.bits_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != book.bits_) {
      throw Error(ErrorCode::kLengthMismatch,
                  "codebook row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " bits, expected " +
                      std::to_string(book.bits_));
    }
    if (std::find(class_ids.begin(), class_ids.begin() + r, class_ids[r]) !=
        class_ids.begin() + r) {
      throw Error(ErrorCode::kDuplicateClass,
                  "class " + std::to_string(class_ids[r]) + " appears twice");
    }
    if (std::find(rows.begin(), rows.begin() + r, rows[r]) != rows.begin() + r) {
      throw Error(ErrorCode::kCodebookCollision,
                  "codebook row for class " + std::to_string(class_ids[r]) +
                      " repeats an earlier row");
    }
    for (std::uint8_t bit : rows[r]) {
      if (bit > 1) throw Error(ErrorCode::kInvalidArgument, "code bits must be 0 or 1");
      book.codes_.push_back(bit);
    }
  }
  book.class_ids_ = std::move(class_ids);
  return book;
}

std::optional<std::size_t> Codebook::IndexOf(ClassId label) const {
  const auto it = std::find(class_ids_.begin(), class_ids_.end(), label);
  if (it == class_ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - class_ids_.begin());
}

bool Codebook::is_binary() const {
  return std::all_of(codes_.begin(), codes_.end(),
                     [](double x) { return x == 0.0 || x == 1.0; });
}

Codebook RandomCodebook(std::size_t num_classes, std::size_t bits,
                        std::uint64_t seed) {
  if (num_classes == 0) throw Error(ErrorCode::kEmptySet, "codebook needs >= 1 class");
  CheckCodeLength(num_classes, bits);
  Rng rng(DeriveSeed(seed, kCodebookStream));
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(num_classes);
  std::vector<std::uint8_t> row(bits);
  for (std::size_t c = 0; c < num_classes; ++c) {
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxRowAttempts) {
        throw Error(ErrorCode::kCodebookCollision,
                    "could not draw a distinct row for class " + std::to_string(c) +
                        " in " + std::to_string(kMaxRowAttempts) + " attempts");
      }
      for (auto& bit : row) bit = rng.Bit() ? 1 : 0;
      if (std::find(rows.begin(), rows.end(), row) == rows.end()) break;
    }
    rows.push_back(row);
  }
  std::vector<ClassId> ids(num_classes);
  for (std::size_t c = 0; c < num_classes; ++c) ids[c] = static_cast<ClassId>(c);
  return Codebook::FromBits(std::move(ids), rows);
}

std::size_t DecodeRow(const Codebook& codebook, std::span<const double> predicted) {
  CheckPredictedLength(codebook, predicted.size());
  std::size_t best = 0;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < codebook.num_classes(); ++r) {
    const auto row = codebook.row(r);
    double distance = 0.0;
    for (std::size_t b = 0; b < row.size(); ++b) {
      distance += std::abs(predicted[b] - row[b]);
    }
    if (distance < best_distance) {
      best_distance = distance;
      best = r;
    }
  }
  return best;
}

ClassId Decode(const Codebook& codebook, std::span<const double> predicted) {
  return codebook.class_id(DecodeRow(codebook, predicted));
}

ClassId DecodeCosine(const Codebook& codebook, std::span<const double> predicted) {
  CheckPredictedLength(codebook, predicted.size());
  std::vector<double> p(predicted.size());
  double p_norm = 0.0;
  for (std::size_t b = 0; b < p.size(); ++b) {
    p[b] = 2.0 * predicted[b] - 1.0;
    p_norm += p[b] * p[b];
  }
  p_norm = std::sqrt(p_norm);
  std::size_t best = 0;
  double best_similarity = -std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < codebook.num_classes(); ++r) {
    const auto row = codebook.row(r);
    double dot = 0.0;
    double row_norm = 0.0;
    for (std::size_t b = 0; b < row.size(); ++b) {
      const double s = 2.0 * row[b] - 1.0;
      dot += s * p[b];
      row_norm += s * s;
    }
    const double denom = p_norm * std::sqrt(row_norm);
    const double similarity = denom > 0.0 ? dot / denom : 0.0;
    if (similarity > best_similarity) {
      best_similarity = similarity;
      best = r;
    }
  }
  return codebook.class_id(best);
}

std::vector<std::uint8_t> ThresholdCode(std::span<const double> code, double threshold) {
  std::vector<std::uint8_t> bits(code.size());
  for (std::size_t b = 0; b < code.size(); ++b) bits[b] = code[b] >= threshold ? 1 : 0;
  return bits;
}

std::size_t MinimumPairwiseDistance(const Codebook& codebook) {
  if (!codebook.is_binary()) {
    throw Error(ErrorCode::kInvalidArgument, "minimum distance needs a binary codebook");
  }
  std::size_t best = codebook.bits();
  for (std::size_t i = 0; i < codebook.num_classes(); ++i) {
    for (std::size_t j = i + 1; j < codebook.num_classes(); ++j) {
      std::size_t d = 0;
      for (std::size_t b = 0; b < codebook.bits(); ++b) {
        d += codebook.row(i)[b] != codebook.row(j)[b];
      }
      best = std::min(best, d);
    }
  }
  return best;
}

Codebook ExtendCodebook(const Codebook& codebook, ClassId new_class,
                        std::span<const double> code) {
  if (codebook.IndexOf(new_class)) {
    throw Error(ErrorCode::kDuplicateClass,
                "class " + std::to_string(new_class) + " is already in the codebook");
  }
  CheckPredictedLength(codebook, code.size());
  for (double x : code) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "soft code values must lie in [0, 1]");
    }
  }
  Codebook extended = codebook;
  extended.class_ids_.push_back(new_class);
  extended.codes_.insert(extended.codes_.end(), code.begin(), code.end());
  return extended;
}

EcocModel::EcocModel(std::size_t dimension, std::size_t bits)
    : EcocModel(dimension, bits, std::vector<double>(dimension * bits, 0.0),
                std::vector<double>(bits, 0.0)) {}

EcocModel::EcocModel(std::size_t dimension, std::size_t bits,
                     std::vector<double> weights, std::vector<double> biases)
    : dimension_(dimension),
      bits_(bits),
      weights_(std::move(weights)),
      biases_(std::move(biases)) {
  if (dimension_ == 0 || bits_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "model dimension and bits must be >= 1");
  }
  if (weights_.size() != dimension_ * bits_ || biases_.size() != bits_) {
    throw Error(ErrorCode::kLengthMismatch, "model parameter sizes do not match D x B");
  }
  const auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(weights_.begin(), weights_.end(), finite) ||
      !std::all_of(biases_.begin(), biases_.end(), finite)) {
    throw Error(ErrorCode::kNonFiniteValue, "model parameters must be finite");
  }
}

double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

void Logits(const EcocModel& model, std::span<const float> x, std::span<double> out) {
  if (x.size() != model.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "input dimension " + std::to_string(x.size()) +
                    " does not match model dimension " +
                    std::to_string(model.dimension()));
  }
  const auto biases = model.biases();
  std::copy(biases.begin(), biases.end(), out.begin());
  const std::size_t bits = model.bits();
  const auto w = model.weights();
  for (std::size_t d = 0; d < x.size(); ++d) {
    const double xd = x[d];
    for (std::size_t b = 0; b < bits; ++b) out[b] += xd * w[d * bits + b];
  }
}

}  // namespace

std::vector<double> PredictCode(const EcocModel& model, std::span<const float> x) {
  std::vector<double> code(model.bits());
  Logits(model, x, code);
  for (double& z : code) z = Sigmoid(z);
  return code;
}

std::vector<double> SoftCode(const EcocModel& model,
                             std::span<const std::vector<float>> shots) {
  if (shots.empty()) throw Error(ErrorCode::kEmptySet, "soft code needs at least one shot");
  std::vector<double> sum(model.bits(), 0.0);
  for (const auto& shot : shots) {
    const auto code = PredictCode(model, shot);
    for (std::size_t b = 0; b < sum.size(); ++b) sum[b] += code[b];
  }
  const double k = static_cast<double>(shots.size());
  for (double& x : sum) x /= k;
  return sum;
}

LossGradient EcocLossGradient(const EcocModel& model, const FeatureSet& train,
                              const Codebook& codebook) {
  if (train.dimension() != model.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "training set dimension does not match model");
  }
  if (codebook.bits() != model.bits()) {
    throw Error(ErrorCode::kLengthMismatch, "codebook length does not match model bits");
  }
  const std::size_t dim = model.dimension();
  const std::size_t bits = model.bits();
  LossGradient out;
  out.weight_gradient.assign(dim * bits, 0.0);
  out.bias_gradient.assign(bits, 0.0);
  std::vector<double> z(bits);
  std::vector<double> residual(bits);
  for (std::size_t n = 0; n < train.size(); ++n) {
    const auto row_index = codebook.IndexOf(train.label(n));
    if (!row_index) {
      throw Error(ErrorCode::kUnknownLabel,
                  "training label " + std::to_string(train.label(n)) +
                      " (record " + std::to_string(n) + ") is not in the codebook");
    }
    const auto target = codebook.row(*row_index);
    const auto x = train.vector(n);
    Logits(model, x, z);
    for (std::size_t b = 0; b < bits; ++b) {
      out.loss += BinaryCrossEntropyWithLogit(z[b], target[b]);
      residual[b] = Sigmoid(z[b]) - target[b];
      out.bias_gradient[b] += residual[b];
    }
    for (std::size_t d = 0; d < dim; ++d) {
      const double xd = x[d];
      double* g = out.weight_gradient.data() + d * bits;
      for (std::size_t b = 0; b < bits; ++b) g[b] += xd * residual[b];
    }
  }
  return out;
}

double EcocLoss(const EcocModel& model, const FeatureSet& train,
                const Codebook& codebook) {
  return EcocLossGradient(model, train, codebook).loss;
}

class EcocTrainer {
 public:
  static TrainResult Run(const FeatureSet& train, const Codebook& codebook,
                         double learning_rate, std::uint32_t epochs,
                         std::uint64_t seed) {
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
      throw Error(ErrorCode::kInvalidArgument, "learning rate must be > 0");
    }
    if (epochs < 1) throw Error(ErrorCode::kInvalidArgument, "epochs must be >= 1");
    if (train.empty()) throw Error(ErrorCode::kEmptySet, "training set is empty");
    for (std::size_t n = 0; n < train.size(); ++n) {
      if (!codebook.IndexOf(train.label(n))) {
        throw Error(ErrorCode::kUnknownLabel,
                    "training label " + std::to_string(train.label(n)) +
                        " (record " + std::to_string(n) + ") is not in the codebook");
      }
    }

    const std::size_t dim = train.dimension();
    const std::size_t bits = codebook.bits();
    Rng rng(DeriveSeed(seed, kEcocInitStream));
    std::vector<double> weights(dim * bits);
    for (double& w : weights) w = rng.Uniform(-0.01, 0.01);
    std::vector<double> biases(bits);
    for (double& b : biases) b = rng.Uniform(-0.01, 0.01);

    TrainResult result{EcocModel(dim, bits, std::move(weights), std::move(biases)), {}};
    EcocModel& model = result.model;
    result.loss_trace.reserve(std::size_t{epochs} + 1);
    for (std::uint32_t epoch = 0; epoch < epochs; ++epoch) {
      const LossGradient lg = EcocLossGradient(model, train, codebook);
      CheckFinite(lg.loss, epoch);
      result.loss_trace.push_back(lg.loss);
      for (std::size_t i = 0; i < model.weights_.size(); ++i) {
        model.weights_[i] -= learning_rate * lg.weight_gradient[i];
      }
      for (std::size_t b = 0; b < bits; ++b) {
        model.biases_[b] -= learning_rate * lg.bias_gradient[b];
      }
    }
    const double final_loss = EcocLoss(model, train, codebook);
    CheckFinite(final_loss, epochs);
    result.loss_trace.push_back(final_loss);
    return result;
  }

 private:
  static void CheckFinite(double loss, std::uint32_t epoch) {
    if (!std::isfinite(loss)) {
      throw Error(ErrorCode::kNonFiniteLoss,
                  "loss became non-finite at epoch " + std::to_string(epoch));
    }
  }
};

TrainResult TrainLinearEcoc(const FeatureSet& train, const Codebook& codebook,
                            double learning_rate, std::uint32_t epochs,
                            std::uint64_t seed) {
  return EcocTrainer::Run(train, codebook, learning_rate, epochs, seed);
}

}  // namespace fewshot
