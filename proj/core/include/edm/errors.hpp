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

#ifndef EDM_ERRORS_HPP_
#define EDM_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace edm {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidMatrix,
  kTooLarge,
  kInvalidPartition,
  kNotCentered,
  kNotEdm,
  kNotSpherical,
  kDegenerateSample,
  kInvalidPermutation,
  kDimensionMismatch,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the
// CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace edm

#endif  // EDM_ERRORS_HPP_
