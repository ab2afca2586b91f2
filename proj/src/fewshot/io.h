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

#ifndef FEWSHOT_IO_H_
#define FEWSHOT_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "fewshot/ecoc.h"
#include "fewshot/features.h"
#include "fewshot/multiway.h"

namespace fewshot {

// Binary feature file, all integers little-endian:
//   "FSFV" | u16 version (1) | u32 dimension | u64 record_count
//   record_count x (u32 label | dimension x f32)
inline constexpr char kFeatureMagic[4] = {'F', 'S', 'F', 'V'};
inline constexpr std::uint16_t kFeatureVersion = 1;
inline constexpr std::size_t kFeatureHeaderBytes = 18;

std::vector<std::byte> EncodeFeatures(const FeatureSet& set);
// Throws kBadMagic, kBadVersion, kTruncatedFile, kTrailingData (both with the
// first inconsistent byte offset), kInvalidArgument (dimension 0) or
// kNonFiniteValue (with the record index).
FeatureSet DecodeFeatures(std::span<const std::byte> bytes);

FeatureSet ReadFeatures(const std::filesystem::path& path);
void WriteFeatures(const FeatureSet& set, const std::filesystem::path& path);

// CSV with header "label,f0,...,f{D-1}". Values are written in the shortest
// form that round-trips the float32 value.
FeatureSet ParseCsvFeatures(std::string_view text);
std::string FormatCsvFeatures(const FeatureSet& set);
FeatureSet ReadCsvFeatures(const std::filesystem::path& path);
void WriteCsvFeatures(const FeatureSet& set, const std::filesystem::path& path);

// Picks the binary or CSV codec from the extension (.fsfv or .csv).
// Throws kInvalidArgument for any other extension.
FeatureSet LoadFeatures(const std::filesystem::path& path);
void SaveFeatures(const FeatureSet& set, const std::filesystem::path& path);

// Lines "record_index<TAB>role", role in {support, test}; '#' starts a
// comment line. Records not listed are ignored. Support classes are ordered
// by id and shots/test records by record index.
MultiwaySplit ParseMultiwaySplit(std::string_view text, const FeatureSet& features);
MultiwaySplit ReadMultiwaySplit(const std::filesystem::path& path,
                                const FeatureSet& features);

// Lines "class_id<TAB>bitstring". Only binary codebooks can be written.
Codebook ParseCodebook(std::string_view text);
std::string FormatCodebook(const Codebook& codebook);
Codebook ReadCodebook(const std::filesystem::path& path);
void WriteCodebook(const Codebook& codebook, const std::filesystem::path& path);

// Text model file: "fsecoc-model 1 D B", D lines of B weights, one line of
// B biases. Values use shortest round-trip formatting.
EcocModel ParseModel(std::string_view text);
std::string FormatModel(const EcocModel& model);
EcocModel ReadModel(const std::filesystem::path& path);
void WriteModel(const EcocModel& model, const std::filesystem::path& path);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace fewshot

#endif  // FEWSHOT_IO_H_
