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

#ifndef EDM_RANDOM_HPP_
#define EDM_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace edm {

// Seedable generator with a fully specified output stream: std::mt19937_64
// (whose sequence the standard fixes), a 53-bit mantissa mapping for
// uniforms and the Box-Muller transform for normals. The standard library
// distributions are avoided because their algorithms are
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform on [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t Below(std::uint64_t bound);

  double Normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace edm

#endif  // EDM_RANDOM_HPP_
