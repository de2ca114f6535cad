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

// Dense symmetric linear algebra used by the rest of the library:
// eigendecomposition with a reproducible basis, tolerance-aware rank and
// PSD tests, the Moore-Penrose pseudo-inverse, Kronecker products and the
// generalized Schur complement PSD test.
//
// All thresholds are relative: a quantity x counts as zero when
// |x| <= rel * max(1, scale), where scale is the largest absolute
// eigenvalue of the matrix at hand.

#ifndef EDM_MATRIX_KERNEL_HPP_
#define EDM_MATRIX_KERNEL_HPP_

#include <cstddef>

#include <Eigen/Dense>

namespace edm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr std::size_t kDefaultMaxOrder = 4096;
inline constexpr double kDefaultRelTolerance = 1e-8;
inline constexpr double kDefaultAsymmetryRel = 1e-10;
// kappa_eig in the reconstruction bound |V L V^T - M|_max <= kappa n eps |M|.
inline constexpr double kEigenResidualFactor = 100.0;

struct Tolerance {
  double rel = kDefaultRelTolerance;

  // Throws InvalidArgument unless rel is finite and strictly positive.
  static Tolerance Relative(double rel);

  double Threshold(double scale) const;
};

// Largest absolute entry, 0 for an empty matrix.
double MaxAbsEntry(const Matrix& m);

// max(1, MaxAbsEntry(m)).
double EntryScale(const Matrix& m);

// A real symmetric matrix. Construction averages (M + M^T) / 2 so the
// stored entries are exactly symmetric; inputs whose asymmetry exceeds
// asymmetry_rel * max(1, |M|_max) are rejected.
class SymMatrix {
 public:
  static SymMatrix FromDense(const Matrix& m,
                             double asymmetry_rel = kDefaultAsymmetryRel);
  static SymMatrix Zero(std::size_t n);
  static SymMatrix Identity(std::size_t n);
  static SymMatrix Ones(std::size_t n);

  std::size_t order() const { return static_cast<std::size_t>(m_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Matrix& dense() const { return m_; }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  explicit SymMatrix(Matrix m) : m_(std::move(m)) {}

  Matrix m_;
};

struct EigenDecomposition {
  Vector values;   // descending
  Matrix vectors;  // column i pairs with values(i), orthonormal

  // max(1, |lambda_1|, |lambda_n|).
  double Scale() const;
};

// Symmetric eigendecomposition. Eigenvalues descend; within each
// eigenvector the first entry of largest magnitude is nonnegative.
// Identical inputs give bit-identical outputs.
EigenDecomposition SymEigen(const SymMatrix& m);

std::size_t NumericalRank(const EigenDecomposition& eig, Tolerance tol = {});
std::size_t NumericalRank(const SymMatrix& m, Tolerance tol = {});

// lambda_min >= -tol.rel * max(1, |lambda_1|).
bool IsPsd(const EigenDecomposition& eig, Tolerance tol = {});
bool IsPsd(const SymMatrix& m, Tolerance tol = {});

// V diag(1/lambda) V^T over eigenvalues above the rank threshold.
SymMatrix Pinv(const EigenDecomposition& eig, Tolerance tol = {});
SymMatrix Pinv(const SymMatrix& m, Tolerance tol = {});

// (A kron B)[i*p + k, j*q + l] = A[i, j] * B[k, l] for B of size p x q.
// Throws TooLarge when either output dimension exceeds max_order.
Matrix Kron(const Matrix& a, const Matrix& b,
            std::size_t max_order = kDefaultMaxOrder);
SymMatrix Kron(const SymMatrix& a, const SymMatrix& b,
               std::size_t max_order = kDefaultMaxOrder);

// PSD test through the generalized Schur complement of the trailing block.
// M = [[A, B], [B^T, C]] with A of order k. True iff C is PSD, A - B C^+ B^T
// is PSD, and |B v| <= tol.rel * max(1, |M|_max) for every eigenvector v of C
// whose eigenvalue lies under C's rank threshold.
// Throws InvalidPartition unless 1 <= k < order(M).
bool SchurPsdTest(const SymMatrix& m, std::size_t k, Tolerance tol = {});

}  // namespace edm

#endif  // EDM_MATRIX_KERNEL_HPP_
