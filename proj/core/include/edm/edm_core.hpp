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

// Hollow / centered matrix types, the double-centering map tau and its
// inverse kappa, EDM recognition and configuration recovery.
//
// Points are always reported with their centroid at the origin.

#ifndef EDM_EDM_CORE_HPP_
#define EDM_EDM_CORE_HPP_

#include <cstddef>

#include "edm/matrix_kernel.hpp"

namespace edm {

// Symmetric matrix with an exactly zero diagonal. Entries may be negative;
// this is the codomain of Kappa.
class HollowMatrix {
 public:
  // Throws InvalidMatrix unless m is square, finite, symmetric (see
  // SymMatrix::FromDense) and every diagonal entry is exactly 0.
  static HollowMatrix FromDense(const Matrix& m,
                                double asymmetry_rel = kDefaultAsymmetryRel);

  std::size_t order() const { return sym_.order(); }
  double operator()(std::size_t i, std::size_t j) const { return sym_(i, j); }
  const SymMatrix& sym() const { return sym_; }
  const Matrix& dense() const { return sym_.dense(); }

  friend bool operator==(const HollowMatrix& a, const HollowMatrix& b) {
    return a.sym_ == b.sym_;
  }

 protected:
  explicit HollowMatrix(SymMatrix m) : sym_(std::move(m)) {}

 private:
  SymMatrix sym_;
};

// Hollow symmetric matrix with nonnegative entries: a candidate EDM of
// squared distances.
class DistanceMatrix : public HollowMatrix {
 public:
  static DistanceMatrix FromDense(const Matrix& m,
                                  double asymmetry_rel = kDefaultAsymmetryRel);
  // Throws InvalidMatrix when h has a negative entry.
  static DistanceMatrix FromHollow(const HollowMatrix& h);
  static DistanceMatrix Zero(std::size_t n);

 private:
  explicit DistanceMatrix(HollowMatrix h) : HollowMatrix(std::move(h)) {}
};

// Symmetric matrix annihilating the all-ones vector (B e = 0).
class GramMatrix {
 public:
  // Throws NotCentered when some row sum exceeds tol.rel * n * max(1, |B|_max).
  static GramMatrix FromSym(const SymMatrix& b, Tolerance tol = {});

  std::size_t order() const { return sym_.order(); }
  double operator()(std::size_t i, std::size_t j) const { return sym_(i, j); }
  const SymMatrix& sym() const { return sym_; }
  const Matrix& dense() const { return sym_.dense(); }

 private:
  friend GramMatrix Tau(const HollowMatrix& d);
  explicit GramMatrix(SymMatrix m) : sym_(std::move(m)) {}

  SymMatrix sym_;
};

struct EdmAnalysis;

// n x r matrix whose rows are points with centroid at the origin.
class ConfigurationMatrix {
 public:
  // Throws NotCentered when |P^T e| exceeds tol, InvalidMatrix when P lacks
  // full column rank.
  static ConfigurationMatrix FromPoints(const Matrix& points, Tolerance tol = {});

  std::size_t size() const { return static_cast<std::size_t>(points_.rows()); }
  std::size_t dim() const { return static_cast<std::size_t>(points_.cols()); }
  const Matrix& points() const { return points_; }
  auto point(std::size_t i) const {
    return points_.row(static_cast<Eigen::Index>(i));
  }

 private:
  friend ConfigurationMatrix RecoverConfiguration(const EdmAnalysis&);
  explicit ConfigurationMatrix(Matrix p) : points_(std::move(p)) {}

  Matrix points_;
};

struct EdmVerdict {
  bool is_edm = false;
  std::size_t embedding_dim = 0;
  std::size_t rank_d = 0;
  // Most negative eigenvalue of tau(D); 0 when tau(D) is PSD.
  double psd_defect = 0.0;
};

// J = I - E/n.
SymMatrix CenteringProjector(std::size_t n);

// -1/2 J D J, computed by double centering.
GramMatrix Tau(const HollowMatrix& d);

// diag(B) e^T + e diag(B)^T - 2B.
HollowMatrix Kappa(const GramMatrix& b);
HollowMatrix Kappa(const SymMatrix& b, Tolerance tol = {});

// Everything CheckEdm computes, kept for callers that need the spectra.
struct EdmAnalysis {
  GramMatrix gram;
  EigenDecomposition gram_eigen;
  EigenDecomposition distance_eigen;
  EdmVerdict verdict;
};

EdmAnalysis AnalyzeEdm(const DistanceMatrix& d, Tolerance tol = {});

EdmVerdict CheckEdm(const DistanceMatrix& d, Tolerance tol = {});

// P = V_r diag(sqrt(lambda_1..r)) from the leading eigenpairs of tau(D).
// Throws NotEdm when D is not an EDM.
ConfigurationMatrix RecoverConfiguration(const DistanceMatrix& d,
                                         Tolerance tol = {});
ConfigurationMatrix RecoverConfiguration(const EdmAnalysis& analysis);

// Squared pairwise distances of the rows of `points`.
Matrix SquaredDistances(const Matrix& points);

}  // namespace edm

#endif  // EDM_EDM_CORE_HPP_
