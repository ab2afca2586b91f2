/*
 * Copyright 2026 The fewshot Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the fewshot library: feature sets and their files, feature
 * transforms, nearest-centroid classification, episodic and all-way
 * evaluation, and error-correcting output codes.
 *
 * Conventions:
 *  - Every fallible call returns an fs_status. On failure, output arguments
 *    are left untouched and fs_last_error_message() describes the failure.
 *  - Objects are opaque handles created by *_create / *_read / producing
 *    calls and released with the matching *_destroy (NULL is accepted).
 *  - Pointers returned by accessors stay valid until the owning handle is
 *    destroyed.
 *  - Handles are immutable after construction except fs_feature_set_add.
 *    Distinct handles may be used from different threads; the last-error
 *    message is thread-local.
 */

#ifndef FEWSHOT_FEWSHOT_H_
#define FEWSHOT_FEWSHOT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FEWSHOT_BUILDING_LIBRARY)
#define FS_API __declspec(dllexport)
#else
#define FS_API __declspec(dllimport)
#endif
#else
#define FS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fs_status {
  FS_OK = 0,
  FS_ERR_INVALID_ARGUMENT = 1,
  FS_ERR_EMPTY_SET = 2,
  FS_ERR_ZERO_VECTOR = 3,
  FS_ERR_DIMENSION_MISMATCH = 4,
  FS_ERR_NON_FINITE_VALUE = 5,
  FS_ERR_INSUFFICIENT_CLASSES = 6,
  FS_ERR_INSUFFICIENT_RECORDS = 7,
  FS_ERR_INSUFFICIENT_DATA = 8,
  FS_ERR_CODE_TOO_SHORT = 9,
  FS_ERR_DUPLICATE_CLASS = 10,
  FS_ERR_UNKNOWN_LABEL = 11,
  FS_ERR_NON_FINITE_LOSS = 12,
  FS_ERR_LENGTH_MISMATCH = 13,
  FS_ERR_CODEBOOK_COLLISION = 14,
  FS_ERR_BAD_MAGIC = 15,
  FS_ERR_BAD_VERSION = 16,
  FS_ERR_TRUNCATED_FILE = 17,
  FS_ERR_TRAILING_DATA = 18,
  FS_ERR_PARSE = 19,
  FS_ERR_RAGGED_ROW = 20,
  FS_ERR_UNKNOWN_ROLE = 21,
  FS_ERR_INDEX_OUT_OF_RANGE = 22,
  FS_ERR_ZERO_SUPPORT = 23,
  FS_ERR_IO = 24,
  FS_ERR_OUT_OF_MEMORY = 98,
  FS_ERR_INTERNAL = 99
} fs_status;

FS_API const char* fs_version(void);
/* Stable snake_case name of a status, e.g. "truncated_file". */
FS_API const char* fs_status_name(fs_status status);
/* Message of the last failed call on this thread ("" if none). */
FS_API const char* fs_last_error_message(void);

typedef enum fs_transform {
  FS_TRANSFORM_UN = 0,   /* unnormalized */
  FS_TRANSFORM_L2N = 1,  /* L2-normalized */
  FS_TRANSFORM_CL2N = 2  /* base-mean centered, then L2-normalized */
} fs_transform;

/* Accepts "un", "l2n", "cl2n" (case-insensitive). */
FS_API fs_status fs_transform_parse(const char* name, fs_transform* out);
FS_API const char* fs_transform_name(fs_transform transform);

/* ---- Feature sets ------------------------------------------------------ */

typedef struct fs_feature_set fs_feature_set;

FS_API fs_status fs_feature_set_create(size_t dimension, fs_feature_set** out);
FS_API void fs_feature_set_destroy(fs_feature_set* set);
/* Appends a record; values must hold exactly `dimension` finite floats. */
FS_API fs_status fs_feature_set_add(fs_feature_set* set, uint32_t label,
                                    const float* values, size_t dimension);
FS_API size_t fs_feature_set_dimension(const fs_feature_set* set);
FS_API size_t fs_feature_set_size(const fs_feature_set* set);
FS_API fs_status fs_feature_set_record(const fs_feature_set* set, size_t index,
                                       uint32_t* label, const float** values);

/* Binary "FSFV" files. */
FS_API fs_status fs_feature_set_read_binary(const char* path, fs_feature_set** out);
FS_API fs_status fs_feature_set_write_binary(const fs_feature_set* set, const char* path);
/* CSV files with header label,f0,...,f{D-1}. */
FS_API fs_status fs_feature_set_read_csv(const char* path, fs_feature_set** out);
FS_API fs_status fs_feature_set_write_csv(const fs_feature_set* set, const char* path);
/* Format chosen by extension: .fsfv or .csv. */
FS_API fs_status fs_feature_set_load(const char* path, fs_feature_set** out);
FS_API fs_status fs_feature_set_save(const fs_feature_set* set, const char* path);

/* ---- Transforms -------------------------------------------------------- */

/* Mean of all records; `out` holds `dimension` doubles. */
FS_API fs_status fs_base_mean(const fs_feature_set* base, double* out, size_t dimension);
FS_API fs_status fs_l2_normalize(const double* in, double* out, size_t length);
/* Fits the transform on `base` (may be NULL unless CL2N) and applies it. */
FS_API fs_status fs_apply_transform(fs_transform transform, const fs_feature_set* base,
                                    const float* in, double* out, size_t dimension);

/* ---- Synthetic data ---------------------------------------------------- */

typedef struct fs_synthetic_spec {
  uint64_t num_classes;
  uint64_t dimension;
  uint64_t records_per_class;
  double class_spread;
  double within_spread;
  double offset_norm;
  uint64_t seed;
} fs_synthetic_spec;

FS_API void fs_synthetic_spec_default(fs_synthetic_spec* spec);
/* Known presets: "centering-benefit". */
FS_API fs_status fs_synthetic_preset(const char* name, fs_synthetic_spec* out);
FS_API fs_status fs_synthetic_generate(const fs_synthetic_spec* spec,
                                       fs_feature_set** base, fs_feature_set** novel);

/* ---- Episodic evaluation ---------------------------------------------- */

typedef struct fs_episode_spec {
  uint32_t ways;
  uint32_t shots;
  uint32_t queries;
  uint64_t episodes;
  uint64_t seed;
} fs_episode_spec;

/* 5-way, 1-shot, 15 queries, 10000 episodes, seed 0. */
FS_API void fs_episode_spec_default(fs_episode_spec* spec);

typedef struct fs_accuracy_report fs_accuracy_report;

/* `base` may be NULL unless transform is CL2N. threads == 0 means 1. */
FS_API fs_status fs_evaluate_episodes(const fs_feature_set* novel,
                                      const fs_feature_set* base,
                                      const fs_episode_spec* spec,
                                      fs_transform transform, unsigned threads,
                                      fs_accuracy_report** out);
FS_API void fs_accuracy_report_destroy(fs_accuracy_report* report);
FS_API double fs_accuracy_report_mean(const fs_accuracy_report* report);
FS_API double fs_accuracy_report_ci95(const fs_accuracy_report* report);
FS_API uint64_t fs_accuracy_report_episodes(const fs_accuracy_report* report);
/* Per-episode accuracies in episode-index order. */
FS_API const double* fs_accuracy_report_per_episode(const fs_accuracy_report* report);

FS_API fs_status fs_confidence_interval_95(const double* values, size_t count,
                                           double* mean, double* halfwidth);

/* ---- All-way (multiway) evaluation ------------------------------------ */

typedef struct fs_multiway_split fs_multiway_split;
typedef struct fs_multiway_report fs_multiway_report;

FS_API fs_status fs_multiway_split_read(const char* path, const fs_feature_set* features,
                                        fs_multiway_split** out);
FS_API fs_status fs_multiway_split_parse(const char* text, const fs_feature_set* features,
                                         fs_multiway_split** out);
FS_API void fs_multiway_split_destroy(fs_multiway_split* split);

FS_API fs_status fs_evaluate_multiway(const fs_multiway_split* split,
                                      const fs_feature_set* base, fs_transform transform,
                                      unsigned threads, fs_multiway_report** out);
FS_API void fs_multiway_report_destroy(fs_multiway_report* report);
FS_API double fs_multiway_report_per_class(const fs_multiway_report* report);
FS_API double fs_multiway_report_mean(const fs_multiway_report* report);
FS_API size_t fs_multiway_report_class_count(const fs_multiway_report* report);
FS_API fs_status fs_multiway_report_class(const fs_multiway_report* report, size_t index,
                                          uint32_t* label, uint64_t* tested,
                                          uint64_t* correct);

/* ---- Error-correcting output codes ------------------------------------ */

typedef struct fs_codebook fs_codebook;
typedef struct fs_ecoc_model fs_ecoc_model;

FS_API fs_status fs_codebook_random(size_t num_classes, size_t bits, uint64_t seed,
                                    fs_codebook** out);
FS_API fs_status fs_codebook_read(const char* path, fs_codebook** out);
FS_API fs_status fs_codebook_write(const fs_codebook* codebook, const char* path);
FS_API void fs_codebook_destroy(fs_codebook* codebook);
FS_API size_t fs_codebook_num_classes(const fs_codebook* codebook);
FS_API size_t fs_codebook_bits(const fs_codebook* codebook);
FS_API uint32_t fs_codebook_class_id(const fs_codebook* codebook, size_t row);
/* Row values (0/1, or reals for soft rows); `bits` doubles. */
FS_API const double* fs_codebook_row(const fs_codebook* codebook, size_t row);
FS_API fs_status fs_codebook_min_distance(const fs_codebook* codebook, size_t* out);
/* New codebook with a (soft) row for `new_class`; `codebook` is unchanged. */
FS_API fs_status fs_codebook_extend(const fs_codebook* codebook, uint32_t new_class,
                                    const double* code, size_t bits, fs_codebook** out);
/* Minimum L1 distance decoding, ties to the lowest row. */
FS_API fs_status fs_codebook_decode(const fs_codebook* codebook, const double* predicted,
                                    size_t bits, uint32_t* out);
/* Cosine decoding on the {-1, +1} mapping of codes. */
FS_API fs_status fs_codebook_decode_cosine(const fs_codebook* codebook,
                                           const double* predicted, size_t bits,
                                           uint32_t* out);

FS_API fs_status fs_ecoc_train(const fs_feature_set* train, const fs_codebook* codebook,
                               double learning_rate, uint32_t epochs, uint64_t seed,
                               fs_ecoc_model** out);
FS_API fs_status fs_ecoc_model_read(const char* path, fs_ecoc_model** out);
FS_API fs_status fs_ecoc_model_write(const fs_ecoc_model* model, const char* path);
FS_API void fs_ecoc_model_destroy(fs_ecoc_model* model);
FS_API size_t fs_ecoc_model_dimension(const fs_ecoc_model* model);
FS_API size_t fs_ecoc_model_bits(const fs_ecoc_model* model);
/* Per-epoch loss trace (epochs + 1 values); empty for models read from disk. */
FS_API const double* fs_ecoc_model_loss_trace(const fs_ecoc_model* model, size_t* count);
FS_API fs_status fs_ecoc_predict_code(const fs_ecoc_model* model, const float* x,
                                      size_t dimension, double* out, size_t bits);
/* Mean predicted code over every record of `shots`. */
FS_API fs_status fs_ecoc_soft_code(const fs_ecoc_model* model, const fs_feature_set* shots,
                                   double* out, size_t bits);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* FEWSHOT_FEWSHOT_H_ */
