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

#include "edm/qap.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edm/errors.hpp"
#include "edm/spherical.hpp"

namespace edm {

QapInstance::QapInstance(SymMatrix flow, DistanceMatrix distance)
    : flow_(std::move(flow)), distance_(std::move(distance)) {
  if (flow_.order() != distance_.order()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "flow matrix has order " + std::to_string(flow_.order()) +
                    ", distance matrix has order " +
                    std::to_string(distance_.order()));
  }
}

void ValidatePermutation(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) {
    throw Error(ErrorCode::kInvalidPermutation,
                "permutation has length " + std::to_string(perm.size()) +
                    ", expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (const std::size_t p : perm) {
    if (p >= n || seen[p]) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "entry " + std::to_string(p) + " is out of range or repeated");
    }
    seen[p] = true;
  }
}

namespace {

double ObjectiveUnchecked(const Matrix& a, const Matrix& d,
                          std::span<const std::size_t> perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto pi = static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto pj = static_cast<Eigen::Index>(perm[static_cast<std::size_t>(j)]);
      total += a(i, j) * d(pi, pj);
    }
  }
  return total;
}

}  // namespace

double QapObjective(const QapInstance& inst, std::span<const std::size_t> perm) {
  ValidatePermutation(perm, inst.order());
  return ObjectiveUnchecked(inst.flow().dense(), inst.distance().dense(), perm);
}

QapSolution QapBruteForce(const QapInstance& inst, std::size_t max_order) {
  const std::size_t n = inst.order();
  if (n > max_order) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive search limited to n <= " + std::to_string(max_order) +
                    ", got " + std::to_string(n));
  }
  const Matrix& a = inst.flow().dense();
  const Matrix& d = inst.distance().dense();
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  QapSolution best{perm, ObjectiveUnchecked(a, d, perm)};
  while (std::next_permutation(perm.begin(), perm.end())) {
    const double value = ObjectiveUnchecked(a, d, perm);
    if (value < best.value) {
      best.value = value;
      best.perm = perm;
    }
  }
  return best;
}

QapBoundReport QapShiftLowerBound(const QapInstance& inst, Tolerance tol) {
  const DistanceMatrix& d = inst.distance();
  const double shift = MinShift(d, tol);
  const auto n = static_cast<Eigen::Index>(inst.order());
  const Matrix shifted = Matrix::Constant(n, n, shift) - d.dense();

  QapBoundReport report;
  report.shift = shift;
  report.spectrum_flow = SymEigen(inst.flow()).values;
  report.spectrum_shifted = SymEigen(SymMatrix::FromDense(shifted, 0.0)).values;
  const double flow_total = inst.flow().dense().sum();
  report.lower_bound =
      shift * flow_total - report.spectrum_flow.dot(report.spectrum_shifted);
  report.method = "spherical-shift-eigenvalue";
  return report;
}

}  // namespace edm
