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

// Quadratic assignment: minimize trace(A X D X^T) over permutation
// matrices X, for a symmetric flow matrix A and a distance matrix D.
//
// Permutations are 0-based here: perm[i] is the location assigned to
// facility i, i.e. X[i][perm[i]] = 1.

#ifndef EDM_QAP_HPP_
#define EDM_QAP_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "edm/edm_core.hpp"
#include "edm/matrix_kernel.hpp"

namespace edm {

inline constexpr std::size_t kDefaultBruteForceMaxOrder = 8;

using Permutation = std::vector<std::size_t>;

class QapInstance {
 public:
  // Throws DimensionMismatch when the orders differ.
  QapInstance(SymMatrix flow, DistanceMatrix distance);

  std::size_t order() const { return flow_.order(); }
  const SymMatrix& flow() const { return flow_; }
  const DistanceMatrix& distance() const { return distance_; }

 private:
  SymMatrix flow_;
  DistanceMatrix distance_;
};

struct QapSolution {
  Permutation perm;
  double value = 0.0;
};

struct QapBoundReport {
  double lower_bound = 0.0;
  double shift = 0.0;        // lambda*
  Vector spectrum_flow;      // eigenvalues of A, descending
  Vector spectrum_shifted;   // eigenvalues of lambda* E - D, descending
  std::string method;
};

// Throws InvalidPermutation unless perm is a permutation of [0, n).
void ValidatePermutation(std::span<const std::size_t> perm, std::size_t n);

// sum_ij A[i][j] D[perm[i]][perm[j]] == trace(A X D X^T).
double QapObjective(const QapInstance& inst, std::span<const std::size_t> perm);

// Exhaustive search in lexicographic order; the first minimizer wins ties.
// Throws TooLarge when n exceeds max_order.
QapSolution QapBruteForce(const QapInstance& inst,
                          std::size_t max_order = kDefaultBruteForceMaxOrder);

// With S = lambda* E - D PSD and X E X^T = E,
//   trace(A X D X^T) = lambda* e^T A e - trace(A X S X^T)
//                   >= lambda* e^T A e - sum_i alpha_i beta_i
// where alpha, beta are the descending spectra of A and S.
// Throws NotSpherical (or NotEdm) when D admits no such shift.
QapBoundReport QapShiftLowerBound(const QapInstance& inst, Tolerance tol = {});

}  // namespace edm

#endif  // EDM_QAP_HPP_
