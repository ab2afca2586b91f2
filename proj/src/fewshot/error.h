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

#ifndef FEWSHOT_ERROR_H_
#define FEWSHOT_ERROR_H_

#include <stdexcept>
#include <string>

namespace fewshot {

// Error categories. The numeric values are mirrored by fs_status in the C API.
enum class ErrorCode {
  kInvalidArgument = 1,
  kEmptySet = 2,
  kZeroVector = 3,
  kDimensionMismatch = 4,
  kNonFiniteValue = 5,
  kInsufficientClasses = 6,
  kInsufficientRecords = 7,
  kInsufficientData = 8,
  kCodeTooShort = 9,
  kDuplicateClass = 10,
  kUnknownLabel = 11,
  kNonFiniteLoss = 12,
  kLengthMismatch = 13,
  kCodebookCollision = 14,
  kBadMagic = 15,
  kBadVersion = 16,
  kTruncatedFile = 17,
  kTrailingData = 18,
  kParseError = 19,
  kRaggedRow = 20,
  kUnknownRole = 21,
  kIndexOutOfRange = 22,
  kZeroSupport = 23,
  kIoError = 24,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fewshot

#endif  // FEWSHOT_ERROR_H_
