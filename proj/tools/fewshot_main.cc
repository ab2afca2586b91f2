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

// fewshot command-line tool. Every subcommand talks to the library through
// the C API only.
//
// Exit codes: 0 success, 1 configuration error, 2 data or runtime error.
// Failures print one line "error: <kind>: <message>" to stderr.

#include <charconv>
#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fewshot/fewshot.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kConfigError = 1;
constexpr int kDataError = 2;

class CommandError : public std::runtime_error {
 public:
  CommandError(int exit_code, const std::string& kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

[[noreturn]] void ConfigFail(const std::string& message) {
  throw CommandError(kConfigError, "config", message);
}

// Invalid arguments are configuration errors; everything else is a data or
// runtime error unless the call site says otherwise.
void Check(fs_status status, std::optional<int> exit_code = std::nullopt) {
  if (status == FS_OK) return;
  const int code = exit_code.value_or(status == FS_ERR_INVALID_ARGUMENT ? kConfigError
                                                                        : kDataError);
  throw CommandError(code, fs_status_name(status), fs_last_error_message());
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using FeatureSetPtr = std::unique_ptr<fs_feature_set, Deleter<fs_feature_set, fs_feature_set_destroy>>;
using AccuracyReportPtr =
    std::unique_ptr<fs_accuracy_report, Deleter<fs_accuracy_report, fs_accuracy_report_destroy>>;
using SplitPtr =
    std::unique_ptr<fs_multiway_split, Deleter<fs_multiway_split, fs_multiway_split_destroy>>;
using MultiwayReportPtr =
    std::unique_ptr<fs_multiway_report, Deleter<fs_multiway_report, fs_multiway_report_destroy>>;
using CodebookPtr = std::unique_ptr<fs_codebook, Deleter<fs_codebook, fs_codebook_destroy>>;
using ModelPtr = std::unique_ptr<fs_ecoc_model, Deleter<fs_ecoc_model, fs_ecoc_model_destroy>>;

FeatureSetPtr LoadFeatures(const std::string& path) {
  fs_feature_set* set = nullptr;
  Check(fs_feature_set_load(path.c_str(), &set), kDataError);
  return FeatureSetPtr(set);
}

fs_transform ParseTransform(const std::string& name) {
  fs_transform t;
  if (fs_transform_parse(name.c_str(), &t) != FS_OK) {
    ConfigFail("unknown transform '" + name + "' (expected un, l2n or cl2n)");
  }
  return t;
}

unsigned DefaultThreads() {
  if (const char* env = std::getenv("FEWSHOT_THREADS"); env && *env) {
    unsigned value = 0;
    const std::string s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
      ConfigFail("FEWSHOT_THREADS must be a positive integer, got '" + s + "'");
    }
    return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string Shortest(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw CommandError(kDataError, "io_error", "cannot write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw CommandError(kDataError, "io_error", "cannot write '" + path + "'");
}

std::string CsvTable(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

void CheckFormat(const std::string& format) {
  if (format != "json" && format != "csv") {
    ConfigFail("--format must be json or csv, got '" + format + "'");
  }
}

// ---- eval-fewshot -----------------------------------------------------------

struct FewshotOptions {
  std::string novel;
  std::string base;
  std::string transform = "cl2n";
  fs_episode_spec spec{5, 1, 15, 10000, 0};
  std::optional<unsigned> threads;
  std::string output = "-";
  std::string format = "json";
  bool emit_episodes = false;
};

void RunEvalFewshot(const FewshotOptions& opt) {
  CheckFormat(opt.format);
  const fs_transform transform = ParseTransform(opt.transform);
  if (transform == FS_TRANSFORM_CL2N && opt.base.empty()) {
    ConfigFail("--base is required when --transform is cl2n");
  }
  const unsigned threads = opt.threads.value_or(DefaultThreads());
  if (threads == 0) ConfigFail("--threads must be >= 1");

  const auto novel = LoadFeatures(opt.novel);
  FeatureSetPtr base;
  if (!opt.base.empty()) base = LoadFeatures(opt.base);

  fs_accuracy_report* raw = nullptr;
  Check(fs_evaluate_episodes(novel.get(), base.get(), &opt.spec, transform, threads, &raw));
  const AccuracyReportPtr report(raw);

  const double mean = fs_accuracy_report_mean(report.get());
  const double ci95 = fs_accuracy_report_ci95(report.get());
  std::string text;
  if (opt.format == "json") {
    Json j;
    j["transform"] = fs_transform_name(transform);
    j["ways"] = opt.spec.ways;
    j["shots"] = opt.spec.shots;
    j["queries"] = opt.spec.queries;
    j["episodes"] = opt.spec.episodes;
    j["seed"] = opt.spec.seed;
    j["mean_accuracy"] = mean;
    j["ci95"] = ci95;
    if (opt.emit_episodes) {
      const double* per = fs_accuracy_report_per_episode(report.get());
      j["per_episode"] = std::vector<double>(per, per + fs_accuracy_report_episodes(report.get()));
    }
    text = j.dump(2) + "\n";
  } else {
    text = CsvTable({"transform", "ways", "shots", "queries", "episodes", "seed",
                     "mean_accuracy", "ci95"},
                    {{fs_transform_name(transform), std::to_string(opt.spec.ways),
                      std::to_string(opt.spec.shots), std::to_string(opt.spec.queries),
                      std::to_string(opt.spec.episodes), std::to_string(opt.spec.seed),
                      Shortest(mean), Shortest(ci95)}});
  }
  WriteOutput(opt.output, text);
}

// ---- eval-multiway ------------------------------------------------------------

struct MultiwayOptions {
  std::string features;
  std::string split;
  std::string base;
  std::string transform = "cl2n";
  std::optional<unsigned> threads;
  std::string output = "-";
  std::string format = "json";
};

void RunEvalMultiway(const MultiwayOptions& opt) {
  CheckFormat(opt.format);
  const fs_transform transform = ParseTransform(opt.transform);
  if (transform == FS_TRANSFORM_CL2N && opt.base.empty()) {
    ConfigFail("--base is required when --transform is cl2n");
  }
  const unsigned threads = opt.threads.value_or(DefaultThreads());
  if (threads == 0) ConfigFail("--threads must be >= 1");

  const auto features = LoadFeatures(opt.features);
  FeatureSetPtr base;
  if (!opt.base.empty()) base = LoadFeatures(opt.base);
  fs_multiway_split* raw_split = nullptr;
  Check(fs_multiway_split_read(opt.split.c_str(), features.get(), &raw_split), kDataError);
  const SplitPtr split(raw_split);

  fs_multiway_report* raw = nullptr;
  Check(fs_evaluate_multiway(split.get(), base.get(), transform, threads, &raw));
  const MultiwayReportPtr report(raw);

  const double per_class = fs_multiway_report_per_class(report.get());
  const double mean = fs_multiway_report_mean(report.get());
  const std::size_t classes = fs_multiway_report_class_count(report.get());
  Json breakdown = Json::array();
  std::uint64_t tested_total = 0;
  std::uint64_t correct_total = 0;
  for (std::size_t i = 0; i < classes; ++i) {
    std::uint32_t label = 0;
    std::uint64_t tested = 0;
    std::uint64_t correct = 0;
    Check(fs_multiway_report_class(report.get(), i, &label, &tested, &correct));
    breakdown.push_back({{"class", label}, {"tested", tested}, {"correct", correct}});
    tested_total += tested;
    correct_total += correct;
  }
  std::string text;
  if (opt.format == "json") {
    Json j;
    j["transform"] = fs_transform_name(transform);
    j["classes"] = classes;
    j["per_class_accuracy"] = per_class;
    j["mean_accuracy"] = mean;
    j["class_breakdown"] = breakdown;
    text = j.dump(2) + "\n";
  } else {
    text = CsvTable({"transform", "classes", "tested", "correct", "per_class_accuracy",
                     "mean_accuracy"},
                    {{fs_transform_name(transform), std::to_string(classes),
                      std::to_string(tested_total), std::to_string(correct_total),
                      Shortest(per_class), Shortest(mean)}});
  }
  WriteOutput(opt.output, text);
}

// ---- ecoc ------------------------------------------------------------------------

struct CodebookOptions {
  std::size_t classes = 0;
  std::size_t bits = 0;
  std::uint64_t seed = 0;
  std::string output;
};

void RunEcocCodebook(const CodebookOptions& opt) {
  fs_codebook* raw = nullptr;
  // Both sizes come straight from flags, so a short code is a config error.
  Check(fs_codebook_random(opt.classes, opt.bits, opt.seed, &raw), kConfigError);
  const CodebookPtr codebook(raw);
  Check(fs_codebook_write(codebook.get(), opt.output.c_str()), kDataError);
}

struct TrainOptions {
  std::string features;
  std::string codebook;
  double rate = 0.01;
  std::uint32_t epochs = 500;
  std::uint64_t seed = 0;
  std::string output;
  std::string trace;
};

CodebookPtr ReadCodebook(const std::string& path) {
  fs_codebook* raw = nullptr;
  Check(fs_codebook_read(path.c_str(), &raw), kDataError);
  return CodebookPtr(raw);
}

void RunEcocTrain(const TrainOptions& opt) {
  const auto train = LoadFeatures(opt.features);
  const auto codebook = ReadCodebook(opt.codebook);
  fs_ecoc_model* raw = nullptr;
  Check(fs_ecoc_train(train.get(), codebook.get(), opt.rate, opt.epochs, opt.seed, &raw));
  const ModelPtr model(raw);
  Check(fs_ecoc_model_write(model.get(), opt.output.c_str()), kDataError);
  if (!opt.trace.empty()) {
    std::size_t count = 0;
    const double* trace = fs_ecoc_model_loss_trace(model.get(), &count);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t e = 0; e < count; ++e) rows.push_back({std::to_string(e), Shortest(trace[e])});
    WriteOutput(opt.trace, CsvTable({"epoch", "loss"}, rows));
  }
}

struct EcocEvalOptions {
  std::string model;
  std::string codebook;
  std::string queries;
  std::optional<std::uint32_t> add_class;
  std::string support;
  std::string decoder = "l1";
  std::string output = "-";
  std::string format = "json";
};

void RunEcocEval(const EcocEvalOptions& opt) {
  CheckFormat(opt.format);
  if (opt.decoder != "l1" && opt.decoder != "cosine") {
    ConfigFail("--decoder must be l1 or cosine, got '" + opt.decoder + "'");
  }
  if (opt.add_class.has_value() != !opt.support.empty()) {
    ConfigFail("--add-class and --support must be given together");
  }
  fs_ecoc_model* raw_model = nullptr;
  Check(fs_ecoc_model_read(opt.model.c_str(), &raw_model), kDataError);
  const ModelPtr model(raw_model);
  auto codebook = ReadCodebook(opt.codebook);
  const auto queries = LoadFeatures(opt.queries);
  const std::size_t bits = fs_ecoc_model_bits(model.get());
  const std::size_t dim = fs_ecoc_model_dimension(model.get());

  std::size_t shots = 0;
  if (opt.add_class) {
    // Soft code from the support records labeled with the new class.
    const auto support = LoadFeatures(opt.support);
    fs_feature_set* raw_shots = nullptr;
    Check(fs_feature_set_create(fs_feature_set_dimension(support.get()), &raw_shots));
    const FeatureSetPtr new_shots(raw_shots);
    for (std::size_t i = 0; i < fs_feature_set_size(support.get()); ++i) {
      std::uint32_t label = 0;
      const float* values = nullptr;
      Check(fs_feature_set_record(support.get(), i, &label, &values));
      if (label == *opt.add_class) {
        Check(fs_feature_set_add(new_shots.get(), label, values,
                                 fs_feature_set_dimension(support.get())));
      }
    }
    shots = fs_feature_set_size(new_shots.get());
    std::vector<double> code(bits);
    Check(fs_ecoc_soft_code(model.get(), new_shots.get(), code.data(), bits), kDataError);
    fs_codebook* extended = nullptr;
    Check(fs_codebook_extend(codebook.get(), *opt.add_class, code.data(), bits, &extended),
          kDataError);
    codebook.reset(extended);
  }

  std::size_t correct = 0;
  const std::size_t total = fs_feature_set_size(queries.get());
  std::vector<double> predicted(bits);
  for (std::size_t i = 0; i < total; ++i) {
    std::uint32_t label = 0;
    const float* values = nullptr;
    Check(fs_feature_set_record(queries.get(), i, &label, &values));
    Check(fs_ecoc_predict_code(model.get(), values, fs_feature_set_dimension(queries.get()),
                               predicted.data(), bits),
          kDataError);
    std::uint32_t decoded = 0;
    Check(opt.decoder == "l1"
              ? fs_codebook_decode(codebook.get(), predicted.data(), bits, &decoded)
              : fs_codebook_decode_cosine(codebook.get(), predicted.data(), bits, &decoded),
          kDataError);
    if (decoded == label) ++correct;
  }
  const double accuracy = total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;

  std::string text;
  if (opt.format == "json") {
    Json j;
    j["dimension"] = dim;
    j["bits"] = bits;
    j["classes"] = fs_codebook_num_classes(codebook.get());
    j["decoder"] = opt.decoder;
    j["added_class"] = opt.add_class ? Json(*opt.add_class) : Json(nullptr);
    j["added_shots"] = shots;
    j["queries"] = total;
    j["correct"] = correct;
    j["accuracy"] = accuracy;
    text = j.dump(2) + "\n";
  } else {
    text = CsvTable({"decoder", "classes", "queries", "correct", "accuracy"},
                    {{opt.decoder, std::to_string(fs_codebook_num_classes(codebook.get())),
                      std::to_string(total), std::to_string(correct), Shortest(accuracy)}});
  }
  WriteOutput(opt.output, text);
}

// ---- gen-synthetic ----------------------------------------------------------------

struct SyntheticOptions {
  std::string preset;
  std::optional<std::uint64_t> classes;
  std::optional<std::uint64_t> dimension;
  std::optional<std::uint64_t> records;
  std::optional<double> class_spread;
  std::optional<double> within_spread;
  std::optional<double> offset_norm;
  std::optional<std::uint64_t> seed;
  std::string base_out;
  std::string novel_out;
};

void RunGenSynthetic(const SyntheticOptions& opt) {
  fs_synthetic_spec spec;
  fs_synthetic_spec_default(&spec);
  if (!opt.preset.empty()) Check(fs_synthetic_preset(opt.preset.c_str(), &spec), kConfigError);
  if (opt.classes) spec.num_classes = *opt.classes;
  if (opt.dimension) spec.dimension = *opt.dimension;
  if (opt.records) spec.records_per_class = *opt.records;
  if (opt.class_spread) spec.class_spread = *opt.class_spread;
  if (opt.within_spread) spec.within_spread = *opt.within_spread;
  if (opt.offset_norm) spec.offset_norm = *opt.offset_norm;
  if (opt.seed) spec.seed = *opt.seed;

  fs_feature_set* raw_base = nullptr;
  fs_feature_set* raw_novel = nullptr;
  Check(fs_synthetic_generate(&spec, &raw_base, &raw_novel), kConfigError);
  const FeatureSetPtr base(raw_base);
  const FeatureSetPtr novel(raw_novel);
  Check(fs_feature_set_save(base.get(), opt.base_out.c_str()));
  Check(fs_feature_set_save(novel.get(), opt.novel_out.c_str()));
}

// ---- convert ------------------------------------------------------------------------

void RequireFeatureExtension(const std::string& path) {
  const auto ext = std::filesystem::path(path).extension();
  if (ext != ".csv" && ext != ".fsfv") {
    ConfigFail("cannot infer feature format of '" + path + "' (expected .csv or .fsfv)");
  }
}

void RunConvert(const std::string& in, const std::string& out) {
  RequireFeatureExtension(in);
  RequireFeatureExtension(out);
  fs_feature_set* raw = nullptr;
  Check(fs_feature_set_load(in.c_str(), &raw));
  const FeatureSetPtr set(raw);
  Check(fs_feature_set_save(set.get(), out.c_str()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Few-shot evaluation with nearest-centroid classifiers and ECOC"};
  app.require_subcommand(1);

  FewshotOptions fewshot;
  auto* eval_fewshot = app.add_subcommand("eval-fewshot", "K-shot C-way episodic evaluation");
  eval_fewshot->add_option("--novel", fewshot.novel, "Novel-class features (.fsfv/.csv)")->required();
  eval_fewshot->add_option("--base", fewshot.base, "Base-class features for the CL2N mean");
  eval_fewshot->add_option("--transform", fewshot.transform, "un, l2n or cl2n")->capture_default_str();
  eval_fewshot->add_option("--ways", fewshot.spec.ways, "Classes per episode")->capture_default_str();
  eval_fewshot->add_option("--shots", fewshot.spec.shots, "Support shots per class")->capture_default_str();
  eval_fewshot->add_option("--queries", fewshot.spec.queries, "Queries per class")->capture_default_str();
  eval_fewshot->add_option("--episodes", fewshot.spec.episodes, "Number of episodes")->capture_default_str();
  eval_fewshot->add_option("--seed", fewshot.spec.seed, "Sampling seed")->capture_default_str();
  eval_fewshot->add_option("--threads", fewshot.threads, "Worker threads (default: $FEWSHOT_THREADS or all cores)");
  eval_fewshot->add_option("--output", fewshot.output, "Report path, - for stdout")->capture_default_str();
  eval_fewshot->add_option("--format", fewshot.format, "json or csv")->capture_default_str();
  eval_fewshot->add_flag("--emit-episodes", fewshot.emit_episodes, "Include per-episode accuracies (json)");

  MultiwayOptions multiway;
  auto* eval_multiway = app.add_subcommand("eval-multiway", "All-way variable-shot evaluation");
  eval_multiway->add_option("--features", multiway.features, "Feature file")->required();
  eval_multiway->add_option("--split", multiway.split, "Split file (record_index<TAB>role)")->required();
  eval_multiway->add_option("--base", multiway.base, "Base-class features for the CL2N mean");
  eval_multiway->add_option("--transform", multiway.transform, "un, l2n or cl2n")->capture_default_str();
  eval_multiway->add_option("--threads", multiway.threads, "Worker threads");
  eval_multiway->add_option("--output", multiway.output, "Report path, - for stdout")->capture_default_str();
  eval_multiway->add_option("--format", multiway.format, "json or csv")->capture_default_str();

  auto* ecoc = app.add_subcommand("ecoc", "Error-correcting output codes");
  ecoc->require_subcommand(1);
  CodebookOptions codebook;
  auto* ecoc_codebook = ecoc->add_subcommand("codebook", "Draw a random codebook");
  ecoc_codebook->add_option("--classes", codebook.classes, "Number of classes")->required();
  ecoc_codebook->add_option("--bits", codebook.bits, "Code length")->required();
  ecoc_codebook->add_option("--seed", codebook.seed, "Seed")->capture_default_str();
  ecoc_codebook->add_option("--output", codebook.output, "Codebook file")->required();

  TrainOptions train;
  auto* ecoc_train = ecoc->add_subcommand("train", "Train the linear code predictor");
  ecoc_train->add_option("--features", train.features, "Training features")->required();
  ecoc_train->add_option("--codebook", train.codebook, "Codebook file")->required();
  ecoc_train->add_option("--rate", train.rate, "Learning rate")->capture_default_str();
  ecoc_train->add_option("--epochs", train.epochs, "Full-batch epochs")->capture_default_str();
  ecoc_train->add_option("--seed", train.seed, "Initialization seed")->capture_default_str();
  ecoc_train->add_option("--output", train.output, "Model file")->required();
  ecoc_train->add_option("--trace", train.trace, "Optional CSV of the per-epoch loss");

  EcocEvalOptions ecoc_eval_opt;
  auto* ecoc_eval = ecoc->add_subcommand("eval", "Decode queries and report accuracy");
  ecoc_eval->add_option("--model", ecoc_eval_opt.model, "Model file")->required();
  ecoc_eval->add_option("--codebook", ecoc_eval_opt.codebook, "Codebook file")->required();
  ecoc_eval->add_option("--queries", ecoc_eval_opt.queries, "Labeled query features")->required();
  ecoc_eval->add_option("--add-class", ecoc_eval_opt.add_class, "Register a new class from --support");
  ecoc_eval->add_option("--support", ecoc_eval_opt.support, "Shots of the new class");
  ecoc_eval->add_option("--decoder", ecoc_eval_opt.decoder, "l1 or cosine")->capture_default_str();
  ecoc_eval->add_option("--output", ecoc_eval_opt.output, "Report path, - for stdout")->capture_default_str();
  ecoc_eval->add_option("--format", ecoc_eval_opt.format, "json or csv")->capture_default_str();

  SyntheticOptions synthetic;
  auto* gen = app.add_subcommand("gen-synthetic", "Generate a Gaussian-mixture feature set");
  gen->add_option("--preset", synthetic.preset, "Named configuration (centering-benefit)");
  gen->add_option("--classes", synthetic.classes, "Total classes (half base, half novel)");
  gen->add_option("--dim", synthetic.dimension, "Feature dimension");
  gen->add_option("--records-per-class", synthetic.records, "Records per class");
  gen->add_option("--class-spread", synthetic.class_spread, "Std of class means");
  gen->add_option("--within-spread", synthetic.within_spread, "Std of records around their mean");
  gen->add_option("--offset-norm", synthetic.offset_norm, "Norm of the shared offset");
  gen->add_option("--seed", synthetic.seed, "Seed");
  gen->add_option("--base-out", synthetic.base_out, "Base feature file")->required();
  gen->add_option("--novel-out", synthetic.novel_out, "Novel feature file")->required();

  std::string convert_in;
  std::string convert_out;
  auto* convert = app.add_subcommand("convert", "Convert between .csv and .fsfv");
  convert->add_option("--in", convert_in, "Input file")->required();
  convert->add_option("--out", convert_out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (*eval_fewshot) RunEvalFewshot(fewshot);
    else if (*eval_multiway) RunEvalMultiway(multiway);
    else if (*ecoc_codebook) RunEcocCodebook(codebook);
    else if (*ecoc_train) RunEcocTrain(train);
    else if (*ecoc_eval) RunEcocEval(ecoc_eval_opt);
    else if (*gen) RunGenSynthetic(synthetic);
    else if (*convert) RunConvert(convert_in, convert_out);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kDataError;
  }
  return 0;
}
