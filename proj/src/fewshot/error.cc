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

#include "fewshot/error.h"

namespace fewshot {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kEmptySet: return "empty_set";
    case ErrorCode::kZeroVector: return "zero_vector";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kNonFiniteValue: return "non_finite_value";
    case ErrorCode::kInsufficientClasses: return "insufficient_classes";
    case ErrorCode::kInsufficientRecords: return "insufficient_records";
    case ErrorCode::kInsufficientData: return "insufficient_data";
    case ErrorCode::kCodeTooShort: return "code_too_short";
    case ErrorCode::kDuplicateClass: return "duplicate_class";
    case ErrorCode::kUnknownLabel: return "unknown_label";
    case ErrorCode::kNonFiniteLoss: return "non_finite_loss";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kCodebookCollision: return "codebook_collision";
    case ErrorCode::kBadMagic: return "bad_magic";
    case ErrorCode::kBadVersion: return "bad_version";
    case ErrorCode::kTruncatedFile: return "truncated_file";
    case ErrorCode::kTrailingData: return "trailing_data";
    case ErrorCode::kParseError: return "parse_error";
    case ErrorCode::kRaggedRow: return "ragged_row";
    case ErrorCode::kUnknownRole: return "unknown_role";
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kZeroSupport: return "zero_support";
    case ErrorCode::kIoError: return "io_error";
  }
  return "unknown";
}

}  // namespace fewshot
