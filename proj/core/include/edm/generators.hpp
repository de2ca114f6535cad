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

// Constructors for structured distance matrices. Path, grid, hypercube and
// collinear families have small integer entries and are built exactly.

#ifndef EDM_GENERATORS_HPP_
#define EDM_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>

#include "edm/edm_core.hpp"
#include "edm/matrix_kernel.hpp"

namespace edm {

// Numbering of the points of an m-row, n-column grid. Grid point (i, j),
// column i in [1, n] and row j in [1, m], gets index s = i + n (j - 1) in
// [1, m n]. All indices here are 1-based.
class GridIndexMap {
 public:
  struct Point {
    std::size_t i;  // column, [1, n]
    std::size_t j;  // row, [1, m]
    friend bool operator==(const Point&, const Point&) = default;
  };

  GridIndexMap(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }

  std::size_t Forward(std::size_t i, std::size_t j) const;
  // j = ceil(s / n), i = s - n (ceil(s / n) - 1).
  Point Inverse(std::size_t s) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
};

struct PathEdm {
  // g_ij = |i - j|.
  DistanceMatrix matrix;
  // Row i (0-based) is the staircase point whose first i coordinates are 1
  // and the rest 0, in R^{n-1}. These points are NOT centered.
  Matrix staircase;
  // Center (1/2, ..., 1/2) of the sphere through the staircase points.
  Vector center;
};

struct HypercubeEdm {
  DistanceMatrix matrix;
  // Row v is the 0/1 vertex whose binary value is v, most significant
  // coordinate first; row 0 is the all-zeros vertex.
  Matrix vertices;
};

PathEdm MakePathEdm(std::size_t n);

// Manhattan distances |i - k| + |j - l| between the points of an m x n grid,
// numbered by GridIndexMap. Throws TooLarge when m n exceeds max_order.
DistanceMatrix ManhattanGrid(std::size_t m, std::size_t n,
                             std::size_t max_order = kDefaultMaxOrder);

// Hamming distances among the 2^r vertices of the r-cube.
// Throws TooLarge when 2^r exceeds max_order.
HypercubeEdm HypercubeHamming(std::size_t r,
                              std::size_t max_order = kDefaultMaxOrder);

// d_ij = (i - j)^2: collinear points, embedding dimension 1, not spherical
// for n >= 3. Throws InvalidArgument for n < 3.
DistanceMatrix CollinearSqEdm(std::size_t n);

// n points drawn uniformly on a sphere of random radius in R^r, centered at
// their centroid, as squared distances. Draws that do not classify as
// spherical with embedding dimension r by a clear margin are redrawn; after
// max_retries failures throws DegenerateSample. Requires n >= r + 1.
DistanceMatrix RandomSphericalEdm(std::size_t n, std::size_t r,
                                  std::uint64_t seed, Tolerance tol = {},
                                  std::size_t max_order = kDefaultMaxOrder,
                                  int max_retries = 64);

}  // namespace edm

#endif  // EDM_GENERATORS_HPP_
