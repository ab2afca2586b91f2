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

#include "fewshot/episodic.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "fewshot/error.h"
#include "fewshot/parallel.h"
#include "fewshot/rng.h"

namespace fewshot {

void EpisodeSpec::Validate() const {
  if (ways < 2) throw Error(ErrorCode::kInvalidArgument, "ways must be >= 2");
  if (shots < 1) throw Error(ErrorCode::kInvalidArgument, "shots must be >= 1");
  if (queries < 1) throw Error(ErrorCode::kInvalidArgument, "queries must be >= 1");
  if (episodes < 1) throw Error(ErrorCode::kInvalidArgument, "episodes must be >= 1");
}

EpisodeSampler::EpisodeSampler(const FeatureSet& novel, const EpisodeSpec& spec)
    : novel_(novel), spec_(spec) {
  spec_.Validate();
  for (std::size_t i = 0; i < novel.size(); ++i) {
    records_by_class_[novel.label(i)].push_back(i);
  }
  classes_ = novel.Classes();
  if (classes_.size() < spec_.ways) {
    throw Error(ErrorCode::kInsufficientClasses,
                std::to_string(spec_.ways) + "-way episodes need " +
                    std::to_string(spec_.ways) + " classes, novel set has " +
                    std::to_string(classes_.size()));
  }
  const std::size_t needed = std::size_t{spec_.shots} + spec_.queries;
  for (ClassId c : classes_) {
    const std::size_t have = records_by_class_.at(c).size();
    if (have < needed) {
      throw Error(ErrorCode::kInsufficientRecords,
                  "class " + std::to_string(c) + " has " + std::to_string(have) +
                      " records, episodes need " + std::to_string(needed));
    }
  }
}

Episode EpisodeSampler::Sample(std::uint64_t episode_index) const {
  Rng rng(DeriveSeed(spec_.seed, episode_index));
  Episode episode;
  episode.classes = classes_;
  rng.SampleWithoutReplacement(episode.classes, spec_.ways);

  const std::size_t per_class = std::size_t{spec_.shots} + spec_.queries;
  episode.queries.reserve(std::size_t{spec_.ways} * spec_.queries);
  for (ClassId c : episode.classes) {
    std::vector<std::size_t> picked = records_by_class_.at(c);
    rng.SampleWithoutReplacement(picked, per_class);

    std::vector<std::size_t> support(picked.begin(), picked.begin() + spec_.shots);
    std::vector<std::size_t> queries(picked.begin() + spec_.shots, picked.end());
    std::vector<std::vector<float>> shots;
    shots.reserve(support.size());
    for (std::size_t r : support) {
      const auto v = novel_.vector(r);
      shots.emplace_back(v.begin(), v.end());
    }
    for (std::size_t r : queries) {
      const auto v = novel_.vector(r);
      episode.queries.push_back({c, std::vector<float>(v.begin(), v.end())});
    }
    episode.support.Add(c, std::move(shots));
    episode.support_records.push_back(std::move(support));
    episode.query_records.push_back(std::move(queries));
  }
  return episode;
}

Episode SampleEpisode(const FeatureSet& novel, const EpisodeSpec& spec,
                      std::uint64_t episode_index) {
  return EpisodeSampler(novel, spec).Sample(episode_index);
}

MeanInterval ConfidenceInterval95(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) {
    throw Error(ErrorCode::kInsufficientData,
                "a confidence interval needs at least 2 values, got " +
                    std::to_string(n));
  }
  // Shifted-data variance: exact zero for constant input.
  const double shift = values.front();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : values) {
    const double d = v - shift;
    sum += d;
    sum_sq += d * d;
  }
  const double count = static_cast<double>(n);
  const double mean = shift + sum / count;
  const double variance =
      std::max(0.0, (sum_sq - sum * sum / count) / (count - 1.0));
  return {mean, 1.96 * std::sqrt(variance) / std::sqrt(count)};
}

AccuracyReport EvaluateEpisodes(const FeatureSet& novel, const FeatureSet& base,
                                const EpisodeSpec& spec, TransformKind kind,
                                unsigned threads) {
  const EpisodeSampler sampler(novel, spec);
  const TransformState transform = FitTransform(kind, base);
  if (transform.has_base_mean() && transform.base_mean().size() != novel.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "base dimension " + std::to_string(base.dimension()) +
                    " does not match novel dimension " +
                    std::to_string(novel.dimension()));
  }

  AccuracyReport report;
  report.episodes = spec.episodes;
  report.per_episode_accuracies.assign(spec.episodes, 0.0);
  const double total = static_cast<double>(spec.ways) * spec.queries;
  ParallelFor(spec.episodes, threads, [&](std::size_t i) {
    const Episode episode = sampler.Sample(i);
    const NearestCentroidClassifier classifier(episode.support, transform);
    std::size_t correct = 0;
    for (const auto& q : episode.queries) {
      if (classifier.Classify(q.vector) == q.label) ++correct;
    }
    report.per_episode_accuracies[i] = static_cast<double>(correct) / total;
  });

  if (report.per_episode_accuracies.size() >= 2) {
    const auto ci = ConfidenceInterval95(report.per_episode_accuracies);
    report.mean_accuracy = ci.mean;
    report.ci95_halfwidth = ci.halfwidth;
  } else {
    report.mean_accuracy = report.per_episode_accuracies.front();
  }
  return report;
}

}  // namespace fewshot
