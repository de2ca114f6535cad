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

// Test-only oracles and random instance builders. The oracles here do not
// call into the library's linear algebra: eigenvalues come from a plain
// cyclic Jacobi sweep, determinants from cofactor expansion, and QAP
// objectives from explicit permutation-matrix products.

#ifndef EDMKIT_TESTS_TEST_SUPPORT_HPP_
#define EDMKIT_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "edm/matrix_kernel.hpp"
#include "edm/random.hpp"

namespace edm::testing {

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
inline std::vector<double> JacobiEigenvalues(const Matrix& input) {
  const Eigen::Index n = input.rows();
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = input(i, j);
    }
  }
  const auto size = static_cast<std::size_t>(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < size; ++p) {
      for (std::size_t q = p + 1; q < size; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < size; ++p) {
      for (std::size_t q = p + 1; q < size; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < size; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < size; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> values(size);
  for (std::size_t i = 0; i < size; ++i) values[i] = a[i][i];
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

// Determinant by cofactor expansion along the first row (small n only).
inline double CofactorDeterminant(const Matrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  double det = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    Matrix minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index cc = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = m(i, j);
      }
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * m(0, c) * CofactorDeterminant(minor);
  }
  return det;
}

// Literal -1/2 J D J with explicit matrix products.
inline Matrix TauByProducts(const Matrix& d) {
  const Eigen::Index n = d.rows();
  const Matrix j = Matrix::Identity(n, n) -
                   Matrix::Constant(n, n, 1.0 / static_cast<double>(n));
  return -0.5 * j * d * j;
}

inline Matrix PermutationMatrix(const std::vector<std::size_t>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Matrix x = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x(i, static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)])) = 1.0;
  }
  return x;
}

// trace(A X D X^T) by explicit products.
inline double TraceObjective(const Matrix& a, const Matrix& d,
                             const std::vector<std::size_t>& perm) {
  const Matrix x = PermutationMatrix(perm);
  return (a * x * d * x.transpose()).trace();
}

inline std::vector<std::size_t> RandomPermutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.Below(i)]);
  }
  return perm;
}

inline Matrix RandomGaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.Normal();
  }
  return m;
}

inline Matrix RandomSymmetric(Rng& rng, Eigen::Index n) {
  const Matrix g = RandomGaussian(rng, n, n);
  return 0.5 * (g + g.transpose());
}

// n x k matrix with orthonormal columns, by modified Gram-Schmidt.
inline Matrix RandomOrthonormal(Rng& rng, Eigen::Index n, Eigen::Index k) {
  Matrix q = RandomGaussian(rng, n, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    for (Eigen::Index prev = 0; prev < c; ++prev) {
      q.col(c) -= q.col(prev).dot(q.col(c)) * q.col(prev);
    }
    q.col(c) /= q.col(c).norm();
  }
  return q;
}

// Q diag(values) Q^T for a random orthogonal Q.
inline Matrix WithSpectrum(Rng& rng, const Vector& values) {
  const Eigen::Index n = values.size();
  const Matrix q = RandomOrthonormal(rng, n, n);
  Matrix m = q * values.asDiagonal() * q.transpose();
  return 0.5 * (m + m.transpose());
}

// Spectrum with `rank` entries of magnitude in [0.5, 4] (random signs when
// allow_negative) and the rest exactly zero.
inline Vector RandomSpectrum(Rng& rng, Eigen::Index n, Eigen::Index rank,
                             bool allow_negative) {
  Vector v = Vector::Zero(n);
  for (Eigen::Index i = 0; i < rank; ++i) {
    const double mag = rng.Uniform(0.5, 4.0);
    v(i) = (allow_negative && rng.Uniform() < 0.5) ? -mag : mag;
  }
  return v;
}

inline Matrix RandomHollow(Rng& rng, Eigen::Index n, double scale) {
  Matrix d = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) d(i, j) = d(j, i) = scale * rng.Uniform();
  }
  return d;
}

inline Matrix RandomCentered(Rng& rng, Eigen::Index n, double scale) {
  const Matrix j = Matrix::Identity(n, n) -
                   Matrix::Constant(n, n, 1.0 / static_cast<double>(n));
  Matrix b = j * (scale * RandomSymmetric(rng, n)) * j;
  return 0.5 * (b + b.transpose());
}

}  // namespace edm::testing

#endif  // EDMKIT_TESTS_TEST_SUPPORT_HPP_
