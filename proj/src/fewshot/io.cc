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

#include "fewshot/io.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <map>
#include <string>

#include "fewshot/error.h"

namespace fewshot {
namespace {

template <typename T>
void PutLittle(std::vector<std::byte>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::byte>((value >> (8 * i)) & 0xFF));
  }
}

template <typename T>
T GetLittle(const std::byte* p) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(std::to_integer<std::uint8_t>(p[i])) << (8 * i);
  }
  return value;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitFields(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = line.find(sep, start);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, end - start));
    start = end + 1;
  }
}

template <typename T>
bool ParseNumber(std::string_view s, T& out) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

template <typename T>
void AppendShortest(std::string& out, T value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  out.append(buffer, ptr);
}

std::string Where(std::size_t line) { return "line " + std::to_string(line); }

bool IsSkippable(std::string_view line) {
  const auto t = Trim(line);
  return t.empty() || t.front() == '#';
}

std::string Extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

}  // namespace

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for reading");
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoError, "error reading '" + path.string() + "'");
  return text;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "' for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::kIoError, "error writing '" + path.string() + "'");
}

std::vector<std::byte> EncodeFeatures(const FeatureSet& set) {
  std::vector<std::byte> out;
  out.reserve(kFeatureHeaderBytes + set.size() * (4 + 4 * set.dimension()));
  for (char c : kFeatureMagic) out.push_back(static_cast<std::byte>(c));
  PutLittle<std::uint16_t>(out, kFeatureVersion);
  PutLittle<std::uint32_t>(out, static_cast<std::uint32_t>(set.dimension()));
  PutLittle<std::uint64_t>(out, set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    PutLittle<std::uint32_t>(out, set.label(i));
    for (float x : set.vector(i)) PutLittle<std::uint32_t>(out, std::bit_cast<std::uint32_t>(x));
  }
  return out;
}

FeatureSet DecodeFeatures(std::span<const std::byte> bytes) {
  if (bytes.size() < 4) {
    throw Error(ErrorCode::kTruncatedFile,
                "file is truncated at byte offset " + std::to_string(bytes.size()) +
                    " inside the magic");
  }
  if (std::memcmp(bytes.data(), kFeatureMagic, 4) != 0) {
    throw Error(ErrorCode::kBadMagic, "bad magic at byte offset 0, expected \"FSFV\"");
  }
  if (bytes.size() < kFeatureHeaderBytes) {
    throw Error(ErrorCode::kTruncatedFile,
                "file is truncated at byte offset " + std::to_string(bytes.size()) +
                    " inside the 18-byte header");
  }
  const auto version = GetLittle<std::uint16_t>(bytes.data() + 4);
  if (version != kFeatureVersion) {
    throw Error(ErrorCode::kBadVersion,
                "unsupported version " + std::to_string(version) +
                    " at byte offset 4, expected 1");
  }
  const auto dimension = GetLittle<std::uint32_t>(bytes.data() + 6);
  const auto count = GetLittle<std::uint64_t>(bytes.data() + 10);
  if (dimension == 0) {
    throw Error(ErrorCode::kInvalidArgument, "header dimension at byte offset 6 is 0");
  }
  const std::uint64_t record_bytes = 4 + 4 * std::uint64_t{dimension};
  const std::uint64_t available = bytes.size() - kFeatureHeaderBytes;
  const std::uint64_t complete = available / record_bytes;
  if (complete < count) {
    throw Error(ErrorCode::kTruncatedFile,
                "file is truncated: header declares " + std::to_string(count) +
                    " records but record " + std::to_string(complete) +
                    " is incomplete at byte offset " +
                    std::to_string(kFeatureHeaderBytes + complete * record_bytes));
  }
  const std::uint64_t expected = kFeatureHeaderBytes + count * record_bytes;
  if (bytes.size() != expected) {
    throw Error(ErrorCode::kTrailingData,
                "unexpected trailing data at byte offset " + std::to_string(expected));
  }

  FeatureSet set(dimension);
  set.Reserve(count);
  std::vector<float> values(dimension);
  const std::byte* p = bytes.data() + kFeatureHeaderBytes;
  for (std::uint64_t r = 0; r < count; ++r) {
    const auto label = GetLittle<std::uint32_t>(p);
    p += 4;
    for (auto& v : values) {
      v = std::bit_cast<float>(GetLittle<std::uint32_t>(p));
      p += 4;
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kNonFiniteValue,
                    "record " + std::to_string(r) + " contains a non-finite value");
      }
    }
    set.Add(label, values);
  }
  return set;
}

FeatureSet ReadFeatures(const std::filesystem::path& path) {
  const std::string data = ReadTextFile(path);
  return DecodeFeatures(std::as_bytes(std::span<const char>(data)));
}

void WriteFeatures(const FeatureSet& set, const std::filesystem::path& path) {
  const auto bytes = EncodeFeatures(set);
  WriteTextFile(path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                       bytes.size()));
}

FeatureSet ParseCsvFeatures(std::string_view text) {
  const auto lines = SplitLines(text);
  if (lines.empty() || Trim(lines.front()).empty()) {
    throw Error(ErrorCode::kParseError, "line 1: missing CSV header");
  }
  const auto header = SplitFields(lines.front(), ',');
  if (Trim(header.front()) != "label" || header.size() < 2) {
    throw Error(ErrorCode::kParseError,
                "line 1: header must be label,f0,...,f{D-1}");
  }
  const std::size_t dim = header.size() - 1;
  FeatureSet set(dim);
  std::vector<float> values(dim);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    if (Trim(lines[l]).empty()) continue;
    const std::size_t line_no = l + 1;
    const auto fields = SplitFields(lines[l], ',');
    if (fields.size() != dim + 1) {
      throw Error(ErrorCode::kRaggedRow,
                  Where(line_no) + ": row has " + std::to_string(fields.size()) +
                      " fields, expected " + std::to_string(dim + 1));
    }
    ClassId label = 0;
    if (!ParseNumber(fields[0], label)) {
      throw Error(ErrorCode::kParseError,
                  Where(line_no) + " column 1: invalid label '" +
                      std::string(fields[0]) + "'");
    }
    for (std::size_t d = 0; d < dim; ++d) {
      if (!ParseNumber(fields[d + 1], values[d])) {
        throw Error(ErrorCode::kParseError,
                    Where(line_no) + " column " + std::to_string(d + 2) +
                        ": invalid number '" + std::string(fields[d + 1]) + "'");
      }
      if (!std::isfinite(values[d])) {
        throw Error(ErrorCode::kNonFiniteValue,
                    Where(line_no) + " column " + std::to_string(d + 2) +
                        ": non-finite value in record " + std::to_string(set.size()));
      }
    }
    set.Add(label, values);
  }
  return set;
}

std::string FormatCsvFeatures(const FeatureSet& set) {
  std::string out = "label";
  for (std::size_t d = 0; d < set.dimension(); ++d) out += ",f" + std::to_string(d);
  out += '\n';
  for (std::size_t i = 0; i < set.size(); ++i) {
    out += std::to_string(set.label(i));
    for (float x : set.vector(i)) {
      out += ',';
      AppendShortest(out, x);
    }
    out += '\n';
  }
  return out;
}

FeatureSet ReadCsvFeatures(const std::filesystem::path& path) {
  return ParseCsvFeatures(ReadTextFile(path));
}

void WriteCsvFeatures(const FeatureSet& set, const std::filesystem::path& path) {
  WriteTextFile(path, FormatCsvFeatures(set));
}

FeatureSet LoadFeatures(const std::filesystem::path& path) {
  const auto ext = Extension(path);
  if (ext == ".csv") return ReadCsvFeatures(path);
  if (ext == ".fsfv") return ReadFeatures(path);
  throw Error(ErrorCode::kInvalidArgument,
              "cannot infer feature format of '" + path.string() +
                  "' (expected .csv or .fsfv)");
}

void SaveFeatures(const FeatureSet& set, const std::filesystem::path& path) {
  const auto ext = Extension(path);
  if (ext == ".csv") return WriteCsvFeatures(set, path);
  if (ext == ".fsfv") return WriteFeatures(set, path);
  throw Error(ErrorCode::kInvalidArgument,
              "cannot infer feature format of '" + path.string() +
                  "' (expected .csv or .fsfv)");
}

MultiwaySplit ParseMultiwaySplit(std::string_view text, const FeatureSet& features) {
  enum class Role { kSupport, kTest };
  std::map<std::size_t, Role> roles;
  const auto lines = SplitLines(text);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    if (IsSkippable(lines[l])) continue;
    const auto fields = SplitFields(Trim(lines[l]), '\t');
    if (fields.size() != 2) {
      throw Error(ErrorCode::kParseError,
                  Where(l + 1) + ": expected record_index<TAB>role");
    }
    std::size_t index = 0;
    if (!ParseNumber(fields[0], index)) {
      throw Error(ErrorCode::kParseError,
                  Where(l + 1) + ": invalid record index '" + std::string(fields[0]) + "'");
    }
    if (index >= features.size()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  Where(l + 1) + ": record index " + std::to_string(index) +
                      " is out of range (record_count " +
                      std::to_string(features.size()) + ")");
    }
    const auto role_name = Trim(fields[1]);
    Role role;
    if (role_name == "support") {
      role = Role::kSupport;
    } else if (role_name == "test") {
      role = Role::kTest;
    } else {
      throw Error(ErrorCode::kUnknownRole,
                  Where(l + 1) + ": unknown role '" + std::string(role_name) +
                      "' (expected support or test)");
    }
    if (!roles.emplace(index, role).second) {
      throw Error(ErrorCode::kParseError,
                  Where(l + 1) + ": record index " + std::to_string(index) +
                      " listed twice");
    }
  }

  std::map<ClassId, std::vector<std::vector<float>>> shots;
  std::vector<LabeledVector> test;
  for (const auto& [index, role] : roles) {
    const auto v = features.vector(index);
    if (role == Role::kSupport) {
      shots[features.label(index)].emplace_back(v.begin(), v.end());
    } else {
      test.push_back({features.label(index), std::vector<float>(v.begin(), v.end())});
    }
  }
  SupportSet support;
  for (auto& [label, vectors] : shots) support.Add(label, std::move(vectors));
  return MultiwaySplit(std::move(support), std::move(test));
}

MultiwaySplit ReadMultiwaySplit(const std::filesystem::path& path,
                                const FeatureSet& features) {
  return ParseMultiwaySplit(ReadTextFile(path), features);
}

Codebook ParseCodebook(std::string_view text) {
  std::vector<ClassId> ids;
  std::vector<std::vector<std::uint8_t>> rows;
  const auto lines = SplitLines(text);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    if (IsSkippable(lines[l])) continue;
    const auto fields = SplitFields(Trim(lines[l]), '\t');
    ClassId id = 0;
    if (fields.size() != 2 || !ParseNumber(fields[0], id)) {
      throw Error(ErrorCode::kParseError, Where(l + 1) + ": expected class_id<TAB>bitstring");
    }
    const auto bits = Trim(fields[1]);
    std::vector<std::uint8_t> row;
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw Error(ErrorCode::kParseError,
                    Where(l + 1) + ": bitstring may only contain 0 and 1");
      }
      row.push_back(c == '1' ? 1 : 0);
    }
    ids.push_back(id);
    rows.push_back(std::move(row));
  }
  return Codebook::FromBits(std::move(ids), rows);
}

std::string FormatCodebook(const Codebook& codebook) {
  if (!codebook.is_binary()) {
    throw Error(ErrorCode::kInvalidArgument, "only binary codebooks can be written");
  }
  std::string out;
  for (std::size_t r = 0; r < codebook.num_classes(); ++r) {
    out += std::to_string(codebook.class_id(r));
    out += '\t';
    for (double b : codebook.row(r)) out += b == 1.0 ? '1' : '0';
    out += '\n';
  }
  return out;
}

Codebook ReadCodebook(const std::filesystem::path& path) {
  return ParseCodebook(ReadTextFile(path));
}

void WriteCodebook(const Codebook& codebook, const std::filesystem::path& path) {
  WriteTextFile(path, FormatCodebook(codebook));
}

EcocModel ParseModel(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : SplitLines(text)) {
    if (!IsSkippable(line)) lines.push_back(Trim(line));
  }
  if (lines.empty()) throw Error(ErrorCode::kParseError, "empty model file");
  const auto header = SplitFields(lines[0], ' ');
  std::size_t dim = 0;
  std::size_t bits = 0;
  if (header.size() != 4 || header[0] != "fsecoc-model" || header[1] != "1" ||
      !ParseNumber(header[2], dim) || !ParseNumber(header[3], bits)) {
    throw Error(ErrorCode::kParseError, "model header must be 'fsecoc-model 1 D B'");
  }
  if (lines.size() != dim + 2) {
    throw Error(ErrorCode::kParseError,
                "model file needs " + std::to_string(dim + 2) + " lines, found " +
                    std::to_string(lines.size()));
  }
  const auto parse_row = [&](std::size_t l, std::vector<double>& out) {
    const auto fields = SplitFields(lines[l], ' ');
    if (fields.size() != bits) {
      throw Error(ErrorCode::kRaggedRow, "model row " + std::to_string(l) + " has " +
                                             std::to_string(fields.size()) +
                                             " values, expected " + std::to_string(bits));
    }
    for (auto f : fields) {
      double v = 0.0;
      if (!ParseNumber(f, v)) {
        throw Error(ErrorCode::kParseError, "model row " + std::to_string(l) +
                                                ": invalid number '" + std::string(f) + "'");
      }
      out.push_back(v);
    }
  };
  std::vector<double> weights;
  std::vector<double> biases;
  for (std::size_t d = 0; d < dim; ++d) parse_row(d + 1, weights);
  parse_row(dim + 1, biases);
  return EcocModel(dim, bits, std::move(weights), std::move(biases));
}

std::string FormatModel(const EcocModel& model) {
  std::string out = "fsecoc-model 1 " + std::to_string(model.dimension()) + " " +
                    std::to_string(model.bits()) + "\n";
  const auto row = [&](std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out += ' ';
      AppendShortest(out, values[i]);
    }
    out += '\n';
  };
  for (std::size_t d = 0; d < model.dimension(); ++d) {
    row(model.weights().subspan(d * model.bits(), model.bits()));
  }
  row(model.biases());
  return out;
}

EcocModel ReadModel(const std::filesystem::path& path) {
  return ParseModel(ReadTextFile(path));
}

void WriteModel(const EcocModel& model, const std::filesystem::path& path) {
  WriteTextFile(path, FormatModel(model));
}

}  // namespace fewshot
