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

#include "edm/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "edm/errors.hpp"
#include "edm/random.hpp"
#include "edm/spherical.hpp"

namespace edm {
namespace {

// Relative size a generated spectrum gap must clear, far above the default
// rank tolerance.
constexpr double kSampleMargin = 1e-6;

void RequireOrder(std::size_t order, std::size_t max_order) {
  if (order > max_order) {
    throw Error(ErrorCode::kTooLarge, "order " + std::to_string(order) +
                                          " exceeds max order " +
                                          std::to_string(max_order));
  }
}

double AbsDiff(std::size_t a, std::size_t b) {
  return static_cast<double>(a > b ? a - b : b - a);
}

// k-th largest |lambda| (1-based k) relative to the largest.
double RelativeAbsEigenvalue(const EigenDecomposition& eig, std::size_t k) {
  std::vector<double> mags(static_cast<std::size_t>(eig.values.size()));
  for (std::size_t i = 0; i < mags.size(); ++i) {
    mags[i] = std::abs(eig.values(static_cast<Eigen::Index>(i)));
  }
  std::sort(mags.begin(), mags.end(), std::greater<>());
  if (k == 0 || k > mags.size()) return 0.0;
  return mags[k - 1] / std::max(1.0, mags.front());
}

}  // namespace

GridIndexMap::GridIndexMap(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be positive");
  }
}

std::size_t GridIndexMap::Forward(std::size_t i, std::size_t j) const {
  if (i < 1 || i > cols_ || j < 1 || j > rows_) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid point (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") outside " + std::to_string(rows_) + "x" +
                    std::to_string(cols_) + " grid");
  }
  return i + cols_ * (j - 1);
}

GridIndexMap::Point GridIndexMap::Inverse(std::size_t s) const {
  if (s < 1 || s > size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid index " + std::to_string(s) + " outside [1, " +
                    std::to_string(size()) + "]");
  }
  const std::size_t j = (s + cols_ - 1) / cols_;
  return Point{s - cols_ * (j - 1), j};
}

PathEdm MakePathEdm(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "path length must be positive");
  }
  const auto k = static_cast<Eigen::Index>(n);
  Matrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      g(i, j) = AbsDiff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  Matrix staircase = Matrix::Zero(k, k - 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    staircase.row(i).head(i).setOnes();
  }
  return PathEdm{DistanceMatrix::FromDense(g, 0.0), std::move(staircase),
                 Vector::Constant(k - 1, 0.5)};
}

DistanceMatrix ManhattanGrid(std::size_t m, std::size_t n, std::size_t max_order) {
  const GridIndexMap grid(m, n);
  RequireOrder(grid.size(), max_order);
  const auto size = static_cast<Eigen::Index>(grid.size());
  Matrix d(size, size);
  for (std::size_t s = 1; s <= grid.size(); ++s) {
    const auto [i, j] = grid.Inverse(s);
    for (std::size_t t = 1; t <= grid.size(); ++t) {
      const auto [k, l] = grid.Inverse(t);
      d(static_cast<Eigen::Index>(s - 1), static_cast<Eigen::Index>(t - 1)) =
          AbsDiff(i, k) + AbsDiff(j, l);
    }
  }
  return DistanceMatrix::FromDense(d, 0.0);
}

HypercubeEdm HypercubeHamming(std::size_t r, std::size_t max_order) {
  if (r == 0) {
    throw Error(ErrorCode::kInvalidArgument, "hypercube dimension must be positive");
  }
  if (r >= 63 || (std::size_t{1} << r) > max_order) {
    throw Error(ErrorCode::kTooLarge,
                "2^" + std::to_string(r) + " vertices exceed max order " +
                    std::to_string(max_order));
  }
  const std::size_t count = std::size_t{1} << r;
  const auto size = static_cast<Eigen::Index>(count);
  const auto dim = static_cast<Eigen::Index>(r);
  Matrix vertices(size, dim);
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t c = 0; c < r; ++c) {
      vertices(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(c)) =
          static_cast<double>((v >> (r - 1 - c)) & 1U);
    }
  }
  Matrix d(size, size);
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t w = 0; w < count; ++w) {
      d(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(w)) =
          static_cast<double>(std::popcount(v ^ w));
    }
  }
  return HypercubeEdm{DistanceMatrix::FromDense(d, 0.0), std::move(vertices)};
}

DistanceMatrix CollinearSqEdm(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "collinear family needs n >= 3, got " + std::to_string(n));
  }
  const auto k = static_cast<Eigen::Index>(n);
  Matrix d(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      const double gap = AbsDiff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      d(i, j) = gap * gap;
    }
  }
  return DistanceMatrix::FromDense(d, 0.0);
}

DistanceMatrix RandomSphericalEdm(std::size_t n, std::size_t r,
                                  std::uint64_t seed, Tolerance tol,
                                  std::size_t max_order, int max_retries) {
  if (r == 0 || n < r + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "need r >= 1 and n >= r + 1, got n=" + std::to_string(n) +
                    " r=" + std::to_string(r));
  }
  RequireOrder(n, max_order);
  Rng rng(seed);
  const auto rows = static_cast<Eigen::Index>(n);
  const auto dim = static_cast<Eigen::Index>(r);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    const double radius = rng.Uniform(0.5, 2.0);
    Matrix points(rows, dim);
    for (Eigen::Index i = 0; i < rows; ++i) {
      Vector direction(dim);
      double norm = 0.0;
      do {
        for (Eigen::Index c = 0; c < dim; ++c) direction(c) = rng.Normal();
        norm = direction.norm();
      } while (norm < 1e-12);
      points.row(i) = (radius / norm) * direction.transpose();
    }
    points.rowwise() -= points.colwise().mean();

    const DistanceMatrix d = DistanceMatrix::FromDense(SquaredDistances(points), 0.0);
    const EdmAnalysis analysis = AnalyzeEdm(d, tol);
    if (!analysis.verdict.is_edm || analysis.verdict.embedding_dim != r ||
        analysis.verdict.rank_d != r + 1) {
      continue;
    }
    if (RelativeAbsEigenvalue(analysis.gram_eigen, r) < kSampleMargin ||
        RelativeAbsEigenvalue(analysis.distance_eigen, r + 1) < kSampleMargin) {
      continue;
    }
    if (!IsSpherical(d, tol).spherical) continue;
    // Reject caps so narrow that the minimal shift is not resolvable to
    // kSampleMargin relative: the center would sit far outside the hull.
    const double under = (1.0 - kSampleMargin) * MinShift(d, tol);
    const Matrix shifted = Matrix::Constant(rows, rows, under) - d.dense();
    if (IsPsd(SymMatrix::FromDense(shifted, 0.0), tol)) continue;
    return d;
  }
  throw Error(ErrorCode::kDegenerateSample,
              "no well-conditioned spherical sample after " +
                  std::to_string(max_retries + 1) + " draws");
}

}  // namespace edm
