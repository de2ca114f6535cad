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

// Subcommands of the edmkit tool. Each returns the process exit code:
//   0  success / affirmative verdict
//   1  valid input, negative verdict (not an EDM, not spherical, ...)
//   2  usage, parse or validation error
// Reports go to `out`; diagnostics for failures go to `err`.

#ifndef EDMKIT_COMMANDS_HPP_
#define EDMKIT_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "edm/matrix_kernel.hpp"
#include "edm/spherical.hpp"

namespace edmkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

struct GlobalOptions {
  edm::Tolerance tol;
  std::size_t max_order = edm::kDefaultMaxOrder;
  bool json = false;
  std::uint64_t seed = 1;
};

struct GenParams {
  // path | grid | hypercube | collinear | random-spherical
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::size_t> r;
  // "-" writes to `out`.
  std::string output = "-";
};

int CmdGen(const GenParams& params, const GlobalOptions& opts, std::ostream& out,
           std::ostream& err);

int CmdClassify(const std::filesystem::path& input, const GlobalOptions& opts,
                std::ostream& out, std::ostream& err);

int CmdCompose(const std::filesystem::path& first,
               const std::filesystem::path& second,
               const std::filesystem::path& output, const GlobalOptions& opts,
               std::ostream& out, std::ostream& err);

int CmdQap(const std::filesystem::path& flow, const std::filesystem::path& dist,
           bool bound, bool solve, const GlobalOptions& opts, std::ostream& out,
           std::ostream& err);

// Structured ClassificationReport, exactly the documented key set.
std::string ClassificationJson(const edm::EdmClassification& c);

// Parses argv and dispatches. argv[0] is the program name.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace edmkit

#endif  // EDMKIT_COMMANDS_HPP_
