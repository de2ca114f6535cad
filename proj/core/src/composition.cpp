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

#include "edm/composition.hpp"

#include <cmath>
#include <string>

#include "edm/errors.hpp"

namespace edm {

DistanceMatrix KronSumEdm(const DistanceMatrix& d1, const DistanceMatrix& d2,
                          Tolerance tol, std::size_t max_order) {
  const std::size_t m = d1.order();
  const std::size_t n = d2.order();
  if (m * n > max_order) {
    throw Error(ErrorCode::kTooLarge,
                "composed order " + std::to_string(m * n) +
                    " exceeds max order " + std::to_string(max_order));
  }
  if (!CheckEdm(d1, tol).is_edm) {
    throw Error(ErrorCode::kNotEdm, "first factor is not an EDM");
  }
  if (!CheckEdm(d2, tol).is_edm) {
    throw Error(ErrorCode::kNotEdm, "second factor is not an EDM");
  }

  const auto mi = static_cast<Eigen::Index>(m);
  const auto ni = static_cast<Eigen::Index>(n);
  const Matrix& a = d1.dense();
  const Matrix& b = d2.dense();
  Matrix out(mi * ni, mi * ni);
  for (Eigen::Index i = 0; i < mi; ++i) {
    for (Eigen::Index k = 0; k < ni; ++k) {
      for (Eigen::Index j = 0; j < mi; ++j) {
        for (Eigen::Index l = 0; l < ni; ++l) {
          out(i * ni + k, j * ni + l) = b(k, l) + a(i, j);
        }
      }
    }
  }
  return DistanceMatrix::FromDense(out, 0.0);
}

SphereInfo ComposedSphere(const SphereInfo& s1, const SphereInfo& s2) {
  SphereInfo out;
  out.radius_sq = s1.radius_sq + s2.radius_sq;
  out.radius = std::sqrt(out.radius_sq);
  out.min_shift = s1.min_shift + s2.min_shift;
  return out;
}

}  // namespace edm
