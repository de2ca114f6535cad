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

#include "edm/matrix_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "edm/errors.hpp"

namespace edm {

Tolerance Tolerance::Relative(double rel) {
  if (!std::isfinite(rel) || rel <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "tolerance must be finite and positive, got " +
                    std::to_string(rel));
  }
  return Tolerance{rel};
}

double Tolerance::Threshold(double scale) const {
  return rel * std::max(1.0, scale);
}

double MaxAbsEntry(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double EntryScale(const Matrix& m) { return std::max(1.0, MaxAbsEntry(m)); }

SymMatrix SymMatrix::FromDense(const Matrix& m, double asymmetry_rel) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kInvalidMatrix,
                "matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected square");
  }
  if (m.rows() == 0) {
    throw Error(ErrorCode::kInvalidMatrix, "matrix order must be positive");
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::kInvalidMatrix, "matrix has non-finite entries");
  }
  const double limit = asymmetry_rel * EntryScale(m);
  const double asym = MaxAbsEntry(m - m.transpose());
  if (asym > limit) {
    throw Error(ErrorCode::kInvalidMatrix,
                "matrix is not symmetric (max |m_ij - m_ji| = " +
                    std::to_string(asym) + ")");
  }
  Matrix sym = 0.5 * (m + m.transpose());
  return SymMatrix(std::move(sym));
}

SymMatrix SymMatrix::Zero(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return SymMatrix(Matrix::Zero(k, k));
}

SymMatrix SymMatrix::Identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return SymMatrix(Matrix::Identity(k, k));
}

SymMatrix SymMatrix::Ones(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return SymMatrix(Matrix::Ones(k, k));
}

double EigenDecomposition::Scale() const {
  if (values.size() == 0) return 1.0;
  return std::max({1.0, std::abs(values(0)),
                   std::abs(values(values.size() - 1))});
}

EigenDecomposition SymEigen(const SymMatrix& m) {
  const Matrix& dense = m.dense();
  if (!dense.allFinite()) {
    throw Error(ErrorCode::kInvalidMatrix, "matrix has non-finite entries");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(dense, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidMatrix, "eigensolver did not converge");
  }
  const Eigen::Index n = dense.rows();
  EigenDecomposition out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < n; ++r) {
      const double mag = std::abs(out.vectors(r, c));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (out.vectors(pivot, c) < 0.0) out.vectors.col(c) *= -1.0;
  }
  return out;
}

std::size_t NumericalRank(const EigenDecomposition& eig, Tolerance tol) {
  const double threshold = tol.rel * eig.Scale();
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (std::abs(eig.values(i)) > threshold) ++rank;
  }
  return rank;
}

std::size_t NumericalRank(const SymMatrix& m, Tolerance tol) {
  return NumericalRank(SymEigen(m), tol);
}

bool IsPsd(const EigenDecomposition& eig, Tolerance tol) {
  if (eig.values.size() == 0) return true;
  const double lambda_max = eig.values(0);
  const double lambda_min = eig.values(eig.values.size() - 1);
  return lambda_min >= -tol.Threshold(std::abs(lambda_max));
}

bool IsPsd(const SymMatrix& m, Tolerance tol) { return IsPsd(SymEigen(m), tol); }

SymMatrix Pinv(const EigenDecomposition& eig, Tolerance tol) {
  const double threshold = tol.rel * eig.Scale();
  Vector inverted = Vector::Zero(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (std::abs(eig.values(i)) > threshold) inverted(i) = 1.0 / eig.values(i);
  }
  Matrix result = eig.vectors * inverted.asDiagonal() * eig.vectors.transpose();
  return SymMatrix::FromDense(result, 1.0);
}

SymMatrix Pinv(const SymMatrix& m, Tolerance tol) { return Pinv(SymEigen(m), tol); }

Matrix Kron(const Matrix& a, const Matrix& b, std::size_t max_order) {
  const auto rows = static_cast<std::size_t>(a.rows()) *
                    static_cast<std::size_t>(b.rows());
  const auto cols = static_cast<std::size_t>(a.cols()) *
                    static_cast<std::size_t>(b.cols());
  if (rows > max_order || cols > max_order) {
    throw Error(ErrorCode::kTooLarge,
                "Kronecker product of order " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " exceeds max order " +
                    std::to_string(max_order));
  }
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

SymMatrix Kron(const SymMatrix& a, const SymMatrix& b, std::size_t max_order) {
  // The Kronecker product of symmetric matrices is exactly symmetric.
  return SymMatrix::FromDense(Kron(a.dense(), b.dense(), max_order), 0.0);
}

bool SchurPsdTest(const SymMatrix& m, std::size_t k, Tolerance tol) {
  const std::size_t n = m.order();
  if (k < 1 || k >= n) {
    throw Error(ErrorCode::kInvalidPartition,
                "leading block order " + std::to_string(k) +
                    " must lie in [1, " + std::to_string(n - 1) + "]");
  }
  const auto kk = static_cast<Eigen::Index>(k);
  const auto rest = static_cast<Eigen::Index>(n - k);
  const Matrix& dense = m.dense();
  const Matrix a = dense.topLeftCorner(kk, kk);
  const Matrix b = dense.topRightCorner(kk, rest);
  const SymMatrix c = SymMatrix::FromDense(dense.bottomRightCorner(rest, rest), 0.0);

  const EigenDecomposition c_eig = SymEigen(c);
  if (!IsPsd(c_eig, tol)) return false;

  const double null_threshold = tol.rel * c_eig.Scale();
  const double coupling_limit = tol.Threshold(MaxAbsEntry(dense));
  for (Eigen::Index i = 0; i < rest; ++i) {
    if (std::abs(c_eig.values(i)) > null_threshold) continue;
    if ((b * c_eig.vectors.col(i)).norm() > coupling_limit) return false;
  }

  const Matrix c_pinv = Pinv(c_eig, tol).dense();
  const Matrix complement = a - b * c_pinv * b.transpose();
  return IsPsd(SymMatrix::FromDense(complement, 1.0), tol);
}

}  // namespace edm
