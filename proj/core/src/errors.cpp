// Copyright 2026 The edmkit Authors
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

#include "edm/errors.hpp"

namespace edm {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvalidMatrix:
      return "InvalidMatrix";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kInvalidPartition:
      return "InvalidPartition";
    case ErrorCode::kNotCentered:
      return "NotCentered";
    case ErrorCode::kNotEdm:
      return "NotEdm";
    case ErrorCode::kNotSpherical:
      return "NotSpherical";
    case ErrorCode::kDegenerateSample:
      return "DegenerateSample";
    case ErrorCode::kInvalidPermutation:
      return "InvalidPermutation";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace edm
