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

#include "fewshot/fewshot.h"

#include <exception>
#include <new>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fewshot/classifier.h"
#include "fewshot/ecoc.h"
#include "fewshot/episodic.h"
#include "fewshot/error.h"
#include "fewshot/features.h"
#include "fewshot/io.h"
#include "fewshot/multiway.h"
#include "fewshot/synthetic.h"

struct fs_feature_set {
  fewshot::FeatureSet set;
};

struct fs_accuracy_report {
  fewshot::AccuracyReport report;
};

struct fs_multiway_split {
  fewshot::MultiwaySplit split;
};

struct fs_multiway_report {
  fewshot::MultiwayReport report;
};

struct fs_codebook {
  fewshot::Codebook codebook;
};

struct fs_ecoc_model {
  fewshot::EcocModel model;
  std::vector<double> loss_trace;
};

namespace {

thread_local std::string last_error;

fs_status Fail(fs_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
fs_status Guard(Body&& body) {
  try {
    body();
    return FS_OK;
  } catch (const fewshot::Error& e) {
    return Fail(static_cast<fs_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(FS_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return Fail(FS_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(FS_ERR_INTERNAL, "unknown error");
  }
}

fs_status NullArgument(const char* name) {
  return Fail(FS_ERR_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
}

#define FS_REQUIRE(arg) \
  if ((arg) == nullptr) return NullArgument(#arg)

fewshot::TransformKind ToKind(fs_transform transform) {
  switch (transform) {
    case FS_TRANSFORM_UN: return fewshot::TransformKind::kUN;
    case FS_TRANSFORM_L2N: return fewshot::TransformKind::kL2N;
    case FS_TRANSFORM_CL2N: return fewshot::TransformKind::kCL2N;
  }
  throw fewshot::Error(fewshot::ErrorCode::kInvalidArgument, "unknown transform");
}

// A NULL base stands for `empty`, an empty set of the right dimension.
const fewshot::FeatureSet& BaseOrEmpty(const fs_feature_set* base,
                                       const fewshot::FeatureSet& empty) {
  return base != nullptr ? base->set : empty;
}

}  // namespace

extern "C" {

const char* fs_version(void) { return "1.0.0"; }

const char* fs_status_name(fs_status status) {
  switch (status) {
    case FS_OK: return "ok";
    case FS_ERR_OUT_OF_MEMORY: return "out_of_memory";
    case FS_ERR_INTERNAL: return "internal";
    default:
      if (status >= FS_ERR_INVALID_ARGUMENT && status <= FS_ERR_IO) {
        return fewshot::ErrorCodeName(static_cast<fewshot::ErrorCode>(status));
      }
      return "unknown";
  }
}

const char* fs_last_error_message(void) { return last_error.c_str(); }

fs_status fs_transform_parse(const char* name, fs_transform* out) {
  FS_REQUIRE(name);
  FS_REQUIRE(out);
  const auto kind = fewshot::ParseTransform(name);
  if (!kind) {
    return Fail(FS_ERR_INVALID_ARGUMENT,
                "unknown transform '" + std::string(name) + "' (expected un, l2n or cl2n)");
  }
  *out = static_cast<fs_transform>(*kind);
  return FS_OK;
}

const char* fs_transform_name(fs_transform transform) {
  switch (transform) {
    case FS_TRANSFORM_UN: return "un";
    case FS_TRANSFORM_L2N: return "l2n";
    case FS_TRANSFORM_CL2N: return "cl2n";
  }
  return "unknown";
}

// ---- Feature sets ----------------------------------------------------------

fs_status fs_feature_set_create(size_t dimension, fs_feature_set** out) {
  FS_REQUIRE(out);
  return Guard([&] { *out = new fs_feature_set{fewshot::FeatureSet(dimension)}; });
}

void fs_feature_set_destroy(fs_feature_set* set) { delete set; }

fs_status fs_feature_set_add(fs_feature_set* set, uint32_t label, const float* values,
                             size_t dimension) {
  FS_REQUIRE(set);
  FS_REQUIRE(values);
  return Guard([&] { set->set.Add(label, std::span<const float>(values, dimension)); });
}

size_t fs_feature_set_dimension(const fs_feature_set* set) {
  return set ? set->set.dimension() : 0;
}

size_t fs_feature_set_size(const fs_feature_set* set) { return set ? set->set.size() : 0; }

fs_status fs_feature_set_record(const fs_feature_set* set, size_t index, uint32_t* label,
                                const float** values) {
  FS_REQUIRE(set);
  if (index >= set->set.size()) {
    return Fail(FS_ERR_INDEX_OUT_OF_RANGE,
                "record index " + std::to_string(index) + " is out of range");
  }
  if (label) *label = set->set.label(index);
  if (values) *values = set->set.vector(index).data();
  return FS_OK;
}

fs_status fs_feature_set_read_binary(const char* path, fs_feature_set** out) {
  FS_REQUIRE(path);
  FS_REQUIRE(out);
  return Guard([&] { *out = new fs_feature_set{fewshot::ReadFeatures(path)}; });
}

fs_status fs_feature_set_write_binary(const fs_feature_set* set, const char* path) {
  FS_REQUIRE(set);
  FS_REQUIRE(path);
  return Guard([&] { fewshot::WriteFeatures(set->set, path); });
}

fs_status fs_feature_set_read_csv(const char* path, fs_feature_set** out) {
  FS_REQUIRE(path);
  FS_REQUIRE(out);
  return Guard([&] { *out = new fs_feature_set{fewshot::ReadCsvFeatures(path)}; });
}

fs_status fs_feature_set_write_csv(const fs_feature_set* set, const char* path) {
  FS_REQUIRE(set);
  FS_REQUIRE(path);
  return Guard([&] { fewshot::WriteCsvFeatures(set->set, path); });
}

fs_status fs_feature_set_load(const char* path, fs_feature_set** out) {
  FS_REQUIRE(path);
  FS_REQUIRE(out);
  return Guard([&] { *out = new fs_feature_set{fewshot::LoadFeatures(path)}; });
}

fs_status fs_feature_set_save(const fs_feature_set* set, const char* path) {
  FS_REQUIRE(set);
  FS_REQUIRE(path);
  return Guard([&] { fewshot::SaveFeatures(set->set, path); });
}

// ---- Transforms --------------------------------------------------------------

fs_status fs_base_mean(const fs_feature_set* base, double* out, size_t dimension) {
  FS_REQUIRE(base);
  FS_REQUIRE(out);
  return Guard([&] {
    if (dimension != base->set.dimension()) {
      throw fewshot::Error(fewshot::ErrorCode::kDimensionMismatch,
                           "output length does not match set dimension");
    }
    const auto mean = fewshot::ComputeBaseMean(base->set);
    std::copy(mean.begin(), mean.end(), out);
  });
}

fs_status fs_l2_normalize(const double* in, double* out, size_t length) {
  FS_REQUIRE(in);
  FS_REQUIRE(out);
  return Guard([&] {
    const auto v = fewshot::L2Normalize(std::span<const double>(in, length));
    std::copy(v.begin(), v.end(), out);
  });
}

fs_status fs_apply_transform(fs_transform transform, const fs_feature_set* base,
                             const float* in, double* out, size_t dimension) {
  FS_REQUIRE(in);
  FS_REQUIRE(out);
  return Guard([&] {
    fewshot::FeatureSet storage(dimension);
    const auto state =
        fewshot::FitTransform(ToKind(transform), BaseOrEmpty(base, storage));
    const auto v = fewshot::ApplyTransform(state, std::span<const float>(in, dimension));
    std::copy(v.begin(), v.end(), out);
  });
}

// ---- Synthetic data ------------------------------------------------------------

namespace {

fewshot::SyntheticSpec FromC(const fs_synthetic_spec& c) {
  fewshot::SyntheticSpec spec;
  spec.num_classes = c.num_classes;
  spec.dimension = c.dimension;
  spec.records_per_class = c.records_per_class;
  spec.class_spread = c.class_spread;
  spec.within_spread = c.within_spread;
  spec.offset_norm = c.offset_norm;
  spec.seed = c.seed;
  return spec;
}

fs_synthetic_spec ToC(const fewshot::SyntheticSpec& spec) {
  return {spec.num_classes,  spec.dimension,     spec.records_per_class, spec.class_spread,
          spec.within_spread, spec.offset_norm, spec.seed};
}

}  // namespace

void fs_synthetic_spec_default(fs_synthetic_spec* spec) {
  if (spec) *spec = ToC(fewshot::SyntheticSpec{});
}

fs_status fs_synthetic_preset(const char* name, fs_synthetic_spec* out) {
  FS_REQUIRE(name);
  FS_REQUIRE(out);
  const auto spec = fewshot::SyntheticPreset(name);
  if (!spec) {
    return Fail(FS_ERR_INVALID_ARGUMENT, "unknown preset '" + std::string(name) + "'");
  }
  *out = ToC(*spec);
  return FS_OK;
}

fs_status fs_synthetic_generate(const fs_synthetic_spec* spec, fs_feature_set** base,
                                fs_feature_set** novel) {
  FS_REQUIRE(spec);
  FS_REQUIRE(base);
  FS_REQUIRE(novel);
  return Guard([&] {
    auto data = fewshot::GenerateSynthetic(FromC(*spec));
    auto* b = new fs_feature_set{std::move(data.base)};
    try {
      *novel = new fs_feature_set{std::move(data.novel)};
    } catch (...) {
      delete b;
      throw;
    }
    *base = b;
  });
}

// ---- Episodic evaluation -----------------------------------------------------

void fs_episode_spec_default(fs_episode_spec* spec) {
  if (spec) *spec = {5, 1, 15, 10000, 0};
}

fs_status fs_evaluate_episodes(const fs_feature_set* novel, const fs_feature_set* base,
                               const fs_episode_spec* spec, fs_transform transform,
                               unsigned threads, fs_accuracy_report** out) {
  FS_REQUIRE(novel);
  FS_REQUIRE(spec);
  FS_REQUIRE(out);
  return Guard([&] {
    fewshot::EpisodeSpec s;
    s.ways = spec->ways;
    s.shots = spec->shots;
    s.queries = spec->queries;
    s.episodes = spec->episodes;
    s.seed = spec->seed;
    fewshot::FeatureSet storage(novel->set.dimension());
    auto report = fewshot::EvaluateEpisodes(
        novel->set, BaseOrEmpty(base, storage), s,
        ToKind(transform), threads == 0 ? 1 : threads);
    *out = new fs_accuracy_report{std::move(report)};
  });
}

void fs_accuracy_report_destroy(fs_accuracy_report* report) { delete report; }

double fs_accuracy_report_mean(const fs_accuracy_report* report) {
  return report ? report->report.mean_accuracy : 0.0;
}

double fs_accuracy_report_ci95(const fs_accuracy_report* report) {
  return report ? report->report.ci95_halfwidth : 0.0;
}

uint64_t fs_accuracy_report_episodes(const fs_accuracy_report* report) {
  return report ? report->report.episodes : 0;
}

const double* fs_accuracy_report_per_episode(const fs_accuracy_report* report) {
  return report ? report->report.per_episode_accuracies.data() : nullptr;
}

fs_status fs_confidence_interval_95(const double* values, size_t count, double* mean,
                                    double* halfwidth) {
  FS_REQUIRE(mean);
  FS_REQUIRE(halfwidth);
  if (values == nullptr && count > 0) return NullArgument("values");
  return Guard([&] {
    const auto ci = fewshot::ConfidenceInterval95(std::span<const double>(values, count));
    *mean = ci.mean;
    *halfwidth = ci.halfwidth;
  });
}

// ---- Multiway ------------------------------------------------------------------

fs_status fs_multiway_split_read(const char* path, const fs_feature_set* features,
                                 fs_multiway_split** out) {
  FS_REQUIRE(path);
  FS_REQUIRE(features);
  FS_REQUIRE(out);
  return Guard([&] {
    *out = new fs_multiway_split{fewshot::ReadMultiwaySplit(path, features->set)};
  });
}

fs_status fs_multiway_split_parse(const char* text, const fs_feature_set* features,
                                  fs_multiway_split** out) {
  FS_REQUIRE(text);
  FS_REQUIRE(features);
  FS_REQUIRE(out);
  return Guard([&] {
    *out = new fs_multiway_split{fewshot::ParseMultiwaySplit(text, features->set)};
  });
}

void fs_multiway_split_destroy(fs_multiway_split* split) { delete split; }

fs_status fs_evaluate_multiway(const fs_multiway_split* split, const fs_feature_set* base,
                               fs_transform transform, unsigned threads,
                               fs_multiway_report** out) {
  FS_REQUIRE(split);
  FS_REQUIRE(out);
  return Guard([&] {
    const std::size_t dim = split->split.support().dimension();
    fewshot::FeatureSet storage(dim);
    auto report = fewshot::EvaluateMultiway(split->split, BaseOrEmpty(base, storage),
                                            ToKind(transform), threads == 0 ? 1 : threads);
    *out = new fs_multiway_report{std::move(report)};
  });
}

void fs_multiway_report_destroy(fs_multiway_report* report) { delete report; }

double fs_multiway_report_per_class(const fs_multiway_report* report) {
  return report ? report->report.per_class_accuracy : 0.0;
}

double fs_multiway_report_mean(const fs_multiway_report* report) {
  return report ? report->report.mean_accuracy : 0.0;
}

size_t fs_multiway_report_class_count(const fs_multiway_report* report) {
  return report ? report->report.class_breakdown.size() : 0;
}

fs_status fs_multiway_report_class(const fs_multiway_report* report, size_t index,
                                   uint32_t* label, uint64_t* tested, uint64_t* correct) {
  FS_REQUIRE(report);
  const auto& breakdown = report->report.class_breakdown;
  if (index >= breakdown.size()) {
    return Fail(FS_ERR_INDEX_OUT_OF_RANGE,
                "class index " + std::to_string(index) + " is out of range");
  }
  if (label) *label = breakdown[index].label;
  if (tested) *tested = breakdown[index].tested;
  if (correct) *correct = breakdown[index].correct;
  return FS_OK;
}

// ---- ECOC ----------------------------------------------------------------------

fs_status fs_codebook_random(size_t num_classes, size_t bits, uint64_t seed,
                             fs_codebook** out) {
  FS_REQUIRE(out);
  return Guard(
      [&] { *out = new fs_codebook{fewshot::RandomCodebook(num_classes, bits, seed)}; });
}

fs_status fs_codebook_read(const char* path, fs_codebook** out) {
  FS_REQUIRE(path);
  FS_REQUIRE(out);
  return Guard([&] { *out = new fs_codebook{fewshot::ReadCodebook(path)}; });
}

fs_status fs_codebook_write(const fs_codebook* codebook, const char* path) {
  FS_REQUIRE(codebook);
  FS_REQUIRE(path);
  return Guard([&] { fewshot::WriteCodebook(codebook->codebook, path); });
}

void fs_codebook_destroy(fs_codebook* codebook) { delete codebook; }

size_t fs_codebook_num_classes(const fs_codebook* codebook) {
  return codebook ? codebook->codebook.num_classes() : 0;
}

size_t fs_codebook_bits(const fs_codebook* codebook) {
  return codebook ? codebook->codebook.bits() : 0;
}

uint32_t fs_codebook_class_id(const fs_codebook* codebook, size_t row) {
  if (!codebook || row >= codebook->codebook.num_classes()) return 0;
  return codebook->codebook.class_id(row);
}

const double* fs_codebook_row(const fs_codebook* codebook, size_t row) {
  if (!codebook || row >= codebook->codebook.num_classes()) return nullptr;
  return codebook->codebook.row(row).data();
}

fs_status fs_codebook_min_distance(const fs_codebook* codebook, size_t* out) {
  FS_REQUIRE(codebook);
  FS_REQUIRE(out);
  return Guard([&] { *out = fewshot::MinimumPairwiseDistance(codebook->codebook); });
}

fs_status fs_codebook_extend(const fs_codebook* codebook, uint32_t new_class,
                             const double* code, size_t bits, fs_codebook** out) {
  FS_REQUIRE(codebook);
  FS_REQUIRE(code);
  FS_REQUIRE(out);
  return Guard([&] {
    *out = new fs_codebook{fewshot::ExtendCodebook(codebook->codebook, new_class,
                                                   std::span<const double>(code, bits))};
  });
}

fs_status fs_codebook_decode(const fs_codebook* codebook, const double* predicted,
                             size_t bits, uint32_t* out) {
  FS_REQUIRE(codebook);
  FS_REQUIRE(predicted);
  FS_REQUIRE(out);
  return Guard([&] {
    *out = fewshot::Decode(codebook->codebook, std::span<const double>(predicted, bits));
  });
}

fs_status fs_codebook_decode_cosine(const fs_codebook* codebook, const double* predicted,
                                    size_t bits, uint32_t* out) {
  FS_REQUIRE(codebook);
  FS_REQUIRE(predicted);
  FS_REQUIRE(out);
  return Guard([&] {
    *out = fewshot::DecodeCosine(codebook->codebook,
                                 std::span<const double>(predicted, bits));
  });
}

fs_status fs_ecoc_train(const fs_feature_set* train, const fs_codebook* codebook,
                        double learning_rate, uint32_t epochs, uint64_t seed,
                        fs_ecoc_model** out) {
  FS_REQUIRE(train);
  FS_REQUIRE(codebook);
  FS_REQUIRE(out);
  return Guard([&] {
    auto result = fewshot::TrainLinearEcoc(train->set, codebook->codebook, learning_rate,
                                           epochs, seed);
    *out = new fs_ecoc_model{std::move(result.model), std::move(result.loss_trace)};
  });
}

fs_status fs_ecoc_model_read(const char* path, fs_ecoc_model** out) {
  FS_REQUIRE(path);
  FS_REQUIRE(out);
  return Guard([&] { *out = new fs_ecoc_model{fewshot::ReadModel(path), {}}; });
}

fs_status fs_ecoc_model_write(const fs_ecoc_model* model, const char* path) {
  FS_REQUIRE(model);
  FS_REQUIRE(path);
  return Guard([&] { fewshot::WriteModel(model->model, path); });
}

void fs_ecoc_model_destroy(fs_ecoc_model* model) { delete model; }

size_t fs_ecoc_model_dimension(const fs_ecoc_model* model) {
  return model ? model->model.dimension() : 0;
}

size_t fs_ecoc_model_bits(const fs_ecoc_model* model) {
  return model ? model->model.bits() : 0;
}

const double* fs_ecoc_model_loss_trace(const fs_ecoc_model* model, size_t* count) {
  if (count) *count = model ? model->loss_trace.size() : 0;
  return model ? model->loss_trace.data() : nullptr;
}

fs_status fs_ecoc_predict_code(const fs_ecoc_model* model, const float* x,
                               size_t dimension, double* out, size_t bits) {
  FS_REQUIRE(model);
  FS_REQUIRE(x);
  FS_REQUIRE(out);
  return Guard([&] {
    if (bits != model->model.bits()) {
      throw fewshot::Error(fewshot::ErrorCode::kLengthMismatch,
                           "output length does not match model bits");
    }
    const auto code = fewshot::PredictCode(model->model, std::span<const float>(x, dimension));
    std::copy(code.begin(), code.end(), out);
  });
}

fs_status fs_ecoc_soft_code(const fs_ecoc_model* model, const fs_feature_set* shots,
                            double* out, size_t bits) {
  FS_REQUIRE(model);
  FS_REQUIRE(shots);
  FS_REQUIRE(out);
  return Guard([&] {
    if (bits != model->model.bits()) {
      throw fewshot::Error(fewshot::ErrorCode::kLengthMismatch,
                           "output length does not match model bits");
    }
    std::vector<std::vector<float>> vectors;
    vectors.reserve(shots->set.size());
    for (std::size_t i = 0; i < shots->set.size(); ++i) {
      const auto v = shots->set.vector(i);
      vectors.emplace_back(v.begin(), v.end());
    }
    const auto code = fewshot::SoftCode(model->model, vectors);
    std::copy(code.begin(), code.end(), out);
  });
}

}  // extern "C"
