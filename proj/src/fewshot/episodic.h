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

#ifndef FEWSHOT_EPISODIC_H_
#define FEWSHOT_EPISODIC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "fewshot/classifier.h"
#include "fewshot/features.h"

namespace fewshot {

struct EpisodeSpec {
  std::uint32_t ways = 5;
  std::uint32_t shots = 1;
  std::uint32_t queries = 15;
  std::uint64_t episodes = 10000;
  std::uint64_t seed = 0;

  // Throws kInvalidArgument unless ways >= 2 and the other counts are >= 1.
  void Validate() const;
};

struct LabeledVector {
  ClassId label;
  std::vector<float> vector;
};

// One sampled task. support_records[c] and query_records[c] hold the source
// record indices of classes[c], in draw order.
struct Episode {
  std::vector<ClassId> classes;
  std::vector<std::vector<std::size_t>> support_records;
  std::vector<std::vector<std::size_t>> query_records;
  SupportSet support;
  std::vector<LabeledVector> queries;
};

// Draws K-shot C-way episodes from a novel set. The randomness of episode i
// is a pure function of (spec.seed, i): an std::mt19937_64 seeded with
// DeriveSeed(seed, i). Classes are drawn without replacement from the sorted
// class list, then K + Q records without replacement within each class; the
// first K are support and the next Q are queries.
class EpisodeSampler {
 public:
  // Throws kInvalidArgument, kInsufficientClasses or kInsufficientRecords.
  EpisodeSampler(const FeatureSet& novel, const EpisodeSpec& spec);

  Episode Sample(std::uint64_t episode_index) const;

  const EpisodeSpec& spec() const { return spec_; }

 private:
  const FeatureSet& novel_;
  EpisodeSpec spec_;
  std::vector<ClassId> classes_;
  std::unordered_map<ClassId, std::vector<std::size_t>> records_by_class_;
};

Episode SampleEpisode(const FeatureSet& novel, const EpisodeSpec& spec,
                      std::uint64_t episode_index);

struct MeanInterval {
  double mean;
  double halfwidth;
};

// Mean and 1.96 * s / sqrt(n) with s the n-1 sample standard deviation.
// Throws kInsufficientData for fewer than two values.
MeanInterval ConfidenceInterval95(std::span<const double> values);

struct AccuracyReport {
  double mean_accuracy = 0.0;
  double ci95_halfwidth = 0.0;
  std::vector<double> per_episode_accuracies;
  std::uint64_t episodes = 0;
};

// Runs spec.episodes episodes with the nearest-centroid rule under `kind`
// (fitted on `base`). Per-episode accuracies are ordered by episode index and
// do not depend on `threads`. A single-episode report has ci95_halfwidth 0.
AccuracyReport EvaluateEpisodes(const FeatureSet& novel, const FeatureSet& base,
                                const EpisodeSpec& spec, TransformKind kind,
                                unsigned threads = 1);

}  // namespace fewshot

#endif  // FEWSHOT_EPISODIC_H_
