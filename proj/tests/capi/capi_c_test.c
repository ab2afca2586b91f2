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

/* Exercises the shared library from plain C. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "fewshot/fewshot.h"

static int failures = 0;

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

#define CHECK_OK(expr) CHECK((expr) == FS_OK)

static void test_features(const char* dir) {
  fs_feature_set* set = NULL;
  fs_feature_set* back = NULL;
  const float a[2] = {1.0f, 1.0f};
  const float b[2] = {3.0f, 3.0f};
  const float bad[2] = {NAN, 0.0f};
  double mean[2];
  uint32_t label = 0;
  const float* values = NULL;
  char path[512];

  CHECK(fs_feature_set_create(0, &set) == FS_ERR_INVALID_ARGUMENT);
  CHECK(strlen(fs_last_error_message()) > 0);
  CHECK_OK(fs_feature_set_create(2, &set));
  CHECK_OK(fs_feature_set_add(set, 4, a, 2));
  CHECK_OK(fs_feature_set_add(set, 5, b, 2));
  CHECK(fs_feature_set_add(set, 5, a, 1) == FS_ERR_DIMENSION_MISMATCH);
  CHECK(fs_feature_set_add(set, 5, bad, 2) == FS_ERR_NON_FINITE_VALUE);
  CHECK(fs_feature_set_size(set) == 2);
  CHECK(fs_feature_set_dimension(set) == 2);
  CHECK_OK(fs_base_mean(set, mean, 2));
  CHECK(mean[0] == 2.0 && mean[1] == 2.0);
  CHECK_OK(fs_feature_set_record(set, 1, &label, &values));
  CHECK(label == 5 && values[0] == 3.0f);
  CHECK(fs_feature_set_record(set, 2, &label, &values) == FS_ERR_INDEX_OUT_OF_RANGE);

  snprintf(path, sizeof path, "%s/capi_c.fsfv", dir);
  CHECK_OK(fs_feature_set_save(set, path));
  CHECK_OK(fs_feature_set_load(path, &back));
  CHECK(fs_feature_set_size(back) == 2);
  fs_feature_set_destroy(back);
  back = NULL;
  snprintf(path, sizeof path, "%s/capi_c.csv", dir);
  CHECK_OK(fs_feature_set_write_csv(set, path));
  CHECK_OK(fs_feature_set_read_csv(path, &back));
  CHECK_OK(fs_feature_set_record(back, 0, &label, &values));
  CHECK(label == 4 && values[1] == 1.0f);
  fs_feature_set_destroy(back);
  back = NULL;
  CHECK(fs_feature_set_read_binary(path, &back) == FS_ERR_BAD_MAGIC);
  CHECK(back == NULL);
  CHECK(strstr(fs_last_error_message(), "offset 0") != NULL);
  fs_feature_set_destroy(set);
  fs_feature_set_destroy(NULL);
}

static void test_transforms(void) {
  fs_transform t;
  const double in[2] = {3.0, 4.0};
  double out[2];
  const float v[2] = {2.0f, 4.0f};
  const float at_mean[2] = {2.0f, 2.0f};
  const float a[2] = {1.0f, 1.0f};
  const float b[2] = {3.0f, 3.0f};
  fs_feature_set* base = NULL;

  CHECK_OK(fs_transform_parse("cl2n", &t));
  CHECK(t == FS_TRANSFORM_CL2N);
  CHECK(strcmp(fs_transform_name(FS_TRANSFORM_L2N), "l2n") == 0);
  CHECK(fs_transform_parse("pca", &t) == FS_ERR_INVALID_ARGUMENT);
  CHECK_OK(fs_l2_normalize(in, out, 2));
  CHECK(fabs(out[0] - 0.6) < 1e-15 && fabs(out[1] - 0.8) < 1e-15);
  CHECK(fs_l2_normalize((const double[]){0.0, 0.0}, out, 2) == FS_ERR_ZERO_VECTOR);

  CHECK_OK(fs_feature_set_create(2, &base));
  CHECK_OK(fs_feature_set_add(base, 0, a, 2));
  CHECK_OK(fs_feature_set_add(base, 0, b, 2));
  CHECK_OK(fs_apply_transform(FS_TRANSFORM_CL2N, base, v, out, 2));
  CHECK(out[0] == 0.0 && out[1] == 1.0);
  CHECK(fs_apply_transform(FS_TRANSFORM_CL2N, base, at_mean, out, 2) == FS_ERR_ZERO_VECTOR);
  CHECK(fs_apply_transform(FS_TRANSFORM_CL2N, NULL, v, out, 2) == FS_ERR_EMPTY_SET);
  CHECK_OK(fs_apply_transform(FS_TRANSFORM_UN, NULL, v, out, 2));
  CHECK(out[0] == 2.0 && out[1] == 4.0);
  fs_feature_set_destroy(base);
}

static void test_episodes(void) {
  fs_synthetic_spec spec;
  fs_episode_spec ep;
  fs_feature_set* base = NULL;
  fs_feature_set* novel = NULL;
  fs_accuracy_report* one = NULL;
  fs_accuracy_report* four = NULL;
  double mean = 0.0;
  double half = -1.0;
  const double values[3] = {0.8, 0.8, 0.8};

  CHECK_OK(fs_synthetic_preset("centering-benefit", &spec));
  CHECK(spec.num_classes == 20 && spec.dimension == 64 && spec.seed == 42);
  CHECK(fs_synthetic_preset("nope", &spec) == FS_ERR_INVALID_ARGUMENT);
  spec.records_per_class = 30;
  CHECK_OK(fs_synthetic_generate(&spec, &base, &novel));
  CHECK(fs_feature_set_size(base) == 300 && fs_feature_set_size(novel) == 300);

  fs_episode_spec_default(&ep);
  CHECK(ep.ways == 5 && ep.shots == 1 && ep.queries == 15 && ep.episodes == 10000);
  ep.episodes = 200;
  ep.seed = 3;
  CHECK_OK(fs_evaluate_episodes(novel, base, &ep, FS_TRANSFORM_CL2N, 1, &one));
  CHECK_OK(fs_evaluate_episodes(novel, base, &ep, FS_TRANSFORM_CL2N, 4, &four));
  CHECK(fs_accuracy_report_episodes(one) == 200);
  CHECK(fs_accuracy_report_mean(one) == fs_accuracy_report_mean(four));
  CHECK(memcmp(fs_accuracy_report_per_episode(one), fs_accuracy_report_per_episode(four),
               200 * sizeof(double)) == 0);
  CHECK(fs_evaluate_episodes(novel, NULL, &ep, FS_TRANSFORM_CL2N, 1, &one) == FS_ERR_EMPTY_SET);
  ep.ways = 11;
  CHECK(fs_evaluate_episodes(novel, NULL, &ep, FS_TRANSFORM_UN, 1, &one) ==
        FS_ERR_INSUFFICIENT_CLASSES);
  ep.ways = 1;
  CHECK(fs_evaluate_episodes(novel, NULL, &ep, FS_TRANSFORM_UN, 1, &one) ==
        FS_ERR_INVALID_ARGUMENT);
  fs_accuracy_report_destroy(one);
  fs_accuracy_report_destroy(four);

  CHECK_OK(fs_confidence_interval_95(values, 3, &mean, &half));
  CHECK(fabs(mean - 0.8) < 1e-15 && half == 0.0);
  CHECK(fs_confidence_interval_95(values, 1, &mean, &half) == FS_ERR_INSUFFICIENT_DATA);
  fs_feature_set_destroy(base);
  fs_feature_set_destroy(novel);
}

static void test_multiway(void) {
  /* Record 0 supports class 1 at 0, record 1 supports class 2 at 10. Class 1
     has nine right tests and one wrong; class 2 has one of each. */
  static const float values[14] = {0, 10, 1, 1, 1, 1, 1, 1, 1, 1, 1, 9, 9, 1};
  static const uint32_t labels[14] = {1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2};
  fs_feature_set* set = NULL;
  fs_multiway_split* split = NULL;
  fs_multiway_report* report = NULL;
  uint32_t label = 0;
  uint64_t tested = 0;
  uint64_t correct = 0;
  int i;
  char text[512] = "0\tsupport\n1\tsupport\n";

  CHECK_OK(fs_feature_set_create(1, &set));
  for (i = 0; i < 14; ++i) CHECK_OK(fs_feature_set_add(set, labels[i], &values[i], 1));
  for (i = 2; i < 14; ++i) {
    char line[32];
    snprintf(line, sizeof line, "%d\ttest\n", i);
    strcat(text, line);
  }
  CHECK_OK(fs_multiway_split_parse(text, set, &split));
  CHECK_OK(fs_evaluate_multiway(split, NULL, FS_TRANSFORM_UN, 2, &report));
  CHECK(fabs(fs_multiway_report_per_class(report) - 0.7) < 1e-12);
  CHECK(fabs(fs_multiway_report_mean(report) - 10.0 / 12.0) < 1e-12);
  CHECK(fs_multiway_report_class_count(report) == 2);
  CHECK_OK(fs_multiway_report_class(report, 1, &label, &tested, &correct));
  CHECK(label == 2 && tested == 2 && correct == 1);
  CHECK(fs_multiway_split_parse("99\ttest\n", set, &split) == FS_ERR_INDEX_OUT_OF_RANGE);
  fs_multiway_report_destroy(report);
  fs_multiway_split_destroy(split);
  fs_feature_set_destroy(set);
}

static void test_ecoc(const char* dir) {
  fs_codebook* book = NULL;
  fs_codebook* read = NULL;
  fs_codebook* ext = NULL;
  fs_ecoc_model* model = NULL;
  fs_ecoc_model* loaded = NULL;
  fs_feature_set* train = NULL;
  fs_feature_set* junk = NULL;
  fs_synthetic_spec spec;
  size_t dmin = 0;
  size_t count = 0;
  size_t i;
  const double* trace;
  double code[8];
  double again[8];
  uint32_t decoded = 0;
  char path[512];

  CHECK(fs_codebook_random(5, 2, 0, &book) == FS_ERR_CODE_TOO_SHORT);
  CHECK(strstr(fs_last_error_message(), "at least 3 bits") != NULL);
  CHECK_OK(fs_codebook_random(4, 8, 5, &book));
  CHECK(fs_codebook_num_classes(book) == 4 && fs_codebook_bits(book) == 8);
  CHECK(fs_codebook_row(book, 0)[0] == 1.0 && fs_codebook_row(book, 1)[0] == 0.0);
  CHECK_OK(fs_codebook_min_distance(book, &dmin));
  CHECK(dmin >= 1);
  snprintf(path, sizeof path, "%s/capi_c_codebook.txt", dir);
  CHECK_OK(fs_codebook_write(book, path));
  CHECK_OK(fs_codebook_read(path, &read));
  CHECK(memcmp(fs_codebook_row(read, 3), fs_codebook_row(book, 3), 8 * sizeof(double)) == 0);

  fs_synthetic_spec_default(&spec);
  spec.num_classes = 8;
  spec.dimension = 8;
  spec.records_per_class = 50;
  spec.class_spread = 3.0;
  spec.within_spread = 0.3;
  spec.offset_norm = 0.0;
  spec.seed = 11;
  CHECK_OK(fs_synthetic_generate(&spec, &train, &junk));
  CHECK_OK(fs_ecoc_train(train, book, 0.01, 500, 3, &model));
  trace = fs_ecoc_model_loss_trace(model, &count);
  CHECK(count == 501);
  CHECK(fabs(trace[0] - 1121.145297429854) < 1e-9);
  CHECK(fabs(trace[500] - 0.08655793419208932) < 1e-9);
  CHECK(fs_ecoc_train(junk, book, 0.01, 5, 3, NULL) == FS_ERR_INVALID_ARGUMENT);
  CHECK(fs_ecoc_train(junk, book, 0.01, 5, 3, &loaded) == FS_ERR_UNKNOWN_LABEL);

  for (i = 0; i < fs_feature_set_size(train); i += 37) {
    uint32_t label = 0;
    const float* x = NULL;
    CHECK_OK(fs_feature_set_record(train, i, &label, &x));
    CHECK_OK(fs_ecoc_predict_code(model, x, 8, code, 8));
    CHECK_OK(fs_codebook_decode(book, code, 8, &decoded));
    CHECK(decoded == label);
  }

  snprintf(path, sizeof path, "%s/capi_c_model.txt", dir);
  CHECK_OK(fs_ecoc_model_write(model, path));
  CHECK_OK(fs_ecoc_model_read(path, &loaded));
  CHECK(fs_ecoc_model_dimension(loaded) == 8 && fs_ecoc_model_bits(loaded) == 8);
  CHECK_OK(fs_ecoc_soft_code(model, junk, code, 8));
  CHECK_OK(fs_ecoc_soft_code(loaded, junk, again, 8));
  CHECK(memcmp(code, again, sizeof code) == 0);

  CHECK_OK(fs_codebook_extend(book, 9, code, 8, &ext));
  CHECK(fs_codebook_num_classes(ext) == 5 && fs_codebook_class_id(ext, 4) == 9);
  CHECK_OK(fs_codebook_decode(ext, code, 8, &decoded));
  CHECK(decoded == 9);
  CHECK_OK(fs_codebook_decode_cosine(book, fs_codebook_row(book, 2), 8, &decoded));
  CHECK(decoded == 2);
  CHECK(fs_codebook_extend(book, 1, code, 8, &ext) == FS_ERR_DUPLICATE_CLASS);
  CHECK(fs_codebook_decode(book, code, 7, &decoded) == FS_ERR_LENGTH_MISMATCH);

  fs_codebook_destroy(book);
  fs_codebook_destroy(read);
  fs_codebook_destroy(ext);
  fs_ecoc_model_destroy(model);
  fs_ecoc_model_destroy(loaded);
  fs_feature_set_destroy(train);
  fs_feature_set_destroy(junk);
}

int main(int argc, char** argv) {
  const char* dir = argc > 1 ? argv[1] : ".";
  CHECK(strlen(fs_version()) > 0);
  CHECK(strcmp(fs_status_name(FS_OK), "ok") == 0);
  CHECK(strcmp(fs_status_name(FS_ERR_TRUNCATED_FILE), "truncated_file") == 0);
  CHECK(fs_feature_set_size(NULL) == 0);
  test_features(dir);
  test_transforms();
  test_episodes();
  test_multiway();
  test_ecoc(dir);
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
