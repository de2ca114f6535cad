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

// Matrix files come in two flavors:
//
//   text:  the order n, then n*n whitespace-separated reals in row-major
//          order. The writer puts one row per line.
//   json:  {"order": n, "entries": [row-major array of n*n numbers]}
//
// Readers detect the flavor from the first non-blank character. Writers
// render integer-valued entries without a decimal point and all other
// values with 17 significant digits.

#ifndef EDMKIT_MATRIX_FILE_HPP_
#define EDMKIT_MATRIX_FILE_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "edm/matrix_kernel.hpp"

namespace edmkit {

enum class MatrixFormat { kText, kJson };

// Throws edm::Error (ParseError, or TooLarge when n > max_order).
edm::Matrix ParseMatrix(std::string_view content,
                        std::size_t max_order = edm::kDefaultMaxOrder);
edm::Matrix ReadMatrixFile(const std::filesystem::path& path,
                           std::size_t max_order = edm::kDefaultMaxOrder);

std::string FormatNumber(double value);
std::string FormatMatrix(const edm::Matrix& m, MatrixFormat format);
void WriteMatrixFile(const std::filesystem::path& path, const edm::Matrix& m,
                     MatrixFormat format);

}  // namespace edmkit

#endif  // EDMKIT_MATRIX_FILE_HPP_
