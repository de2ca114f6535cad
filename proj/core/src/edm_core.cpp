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

#include "edm/edm_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edm/errors.hpp"

namespace edm {

HollowMatrix HollowMatrix::FromDense(const Matrix& m, double asymmetry_rel) {
  SymMatrix sym = SymMatrix::FromDense(m, asymmetry_rel);
  for (std::size_t i = 0; i < sym.order(); ++i) {
    if (sym(i, i) != 0.0) {
      throw Error(ErrorCode::kInvalidMatrix,
                  "diagonal entry " + std::to_string(i + 1) + " is " +
                      std::to_string(sym(i, i)) + ", expected exactly 0");
    }
  }
  return HollowMatrix(std::move(sym));
}

DistanceMatrix DistanceMatrix::FromDense(const Matrix& m, double asymmetry_rel) {
  return FromHollow(HollowMatrix::FromDense(m, asymmetry_rel));
}

DistanceMatrix DistanceMatrix::FromHollow(const HollowMatrix& h) {
  const Matrix& d = h.dense();
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (d(i, j) < 0.0) {
        throw Error(ErrorCode::kInvalidMatrix,
                    "entry (" + std::to_string(i + 1) + ", " +
                        std::to_string(j + 1) + ") is negative");
      }
    }
  }
  return DistanceMatrix(h);
}

DistanceMatrix DistanceMatrix::Zero(std::size_t n) {
  return FromHollow(HollowMatrix::FromDense(SymMatrix::Zero(n).dense()));
}

GramMatrix GramMatrix::FromSym(const SymMatrix& b, Tolerance tol) {
  const Matrix& dense = b.dense();
  const double limit =
      tol.rel * static_cast<double>(b.order()) * EntryScale(dense);
  const double worst = dense.rowwise().sum().cwiseAbs().maxCoeff();
  if (worst > limit) {
    throw Error(ErrorCode::kNotCentered,
                "row sums reach " + std::to_string(worst) +
                    ", tolerance is " + std::to_string(limit));
  }
  return GramMatrix(b);
}

ConfigurationMatrix ConfigurationMatrix::FromPoints(const Matrix& points,
                                                    Tolerance tol) {
  if (!points.allFinite()) {
    throw Error(ErrorCode::kInvalidMatrix, "configuration has non-finite entries");
  }
  const double scale = EntryScale(points);
  if (points.cols() > 0) {
    const double drift = points.colwise().sum().cwiseAbs().maxCoeff();
    if (drift > tol.rel * static_cast<double>(points.rows()) * scale) {
      throw Error(ErrorCode::kNotCentered, "point centroid is not at the origin");
    }
    const SymMatrix normal = SymMatrix::FromDense(points.transpose() * points, 1.0);
    if (NumericalRank(normal, tol) != static_cast<std::size_t>(points.cols())) {
      throw Error(ErrorCode::kInvalidMatrix,
                  "configuration does not have full column rank");
    }
  }
  return ConfigurationMatrix(points);
}

SymMatrix CenteringProjector(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "projector order must be positive");
  }
  const auto k = static_cast<Eigen::Index>(n);
  const Matrix j = Matrix::Identity(k, k) -
                   Matrix::Constant(k, k, 1.0 / static_cast<double>(n));
  return SymMatrix::FromDense(j, 0.0);
}

GramMatrix Tau(const HollowMatrix& d) {
  const Matrix& dense = d.dense();
  const double n = static_cast<double>(d.order());
  const Vector row_mean = dense.rowwise().sum() / n;
  const double grand_mean = row_mean.sum() / n;
  Matrix b(dense.rows(), dense.cols());
  for (Eigen::Index i = 0; i < dense.rows(); ++i) {
    for (Eigen::Index j = 0; j < dense.cols(); ++j) {
      b(i, j) = -0.5 * (dense(i, j) - row_mean(i) - row_mean(j) + grand_mean);
    }
  }
  return GramMatrix(SymMatrix::FromDense(b, 1.0));
}

HollowMatrix Kappa(const GramMatrix& b) {
  const Matrix& dense = b.dense();
  const Vector diag = dense.diagonal();
  Matrix k(dense.rows(), dense.cols());
  for (Eigen::Index i = 0; i < dense.rows(); ++i) {
    for (Eigen::Index j = 0; j < dense.cols(); ++j) {
      k(i, j) = i == j ? 0.0 : diag(i) + diag(j) - 2.0 * dense(i, j);
    }
  }
  return HollowMatrix::FromDense(k, 0.0);
}

HollowMatrix Kappa(const SymMatrix& b, Tolerance tol) {
  return Kappa(GramMatrix::FromSym(b, tol));
}

EdmAnalysis AnalyzeEdm(const DistanceMatrix& d, Tolerance tol) {
  GramMatrix gram = Tau(d);
  EigenDecomposition gram_eigen = SymEigen(gram.sym());
  EigenDecomposition distance_eigen = SymEigen(d.sym());

  EdmVerdict verdict;
  verdict.is_edm = IsPsd(gram_eigen, tol);
  verdict.embedding_dim = NumericalRank(gram_eigen, tol);
  verdict.rank_d = NumericalRank(distance_eigen, tol);
  const double lambda_min = gram_eigen.values(gram_eigen.values.size() - 1);
  verdict.psd_defect = verdict.is_edm ? 0.0 : std::min(0.0, lambda_min);

  return EdmAnalysis{std::move(gram), std::move(gram_eigen),
                     std::move(distance_eigen), verdict};
}

EdmVerdict CheckEdm(const DistanceMatrix& d, Tolerance tol) {
  return AnalyzeEdm(d, tol).verdict;
}

ConfigurationMatrix RecoverConfiguration(const EdmAnalysis& analysis) {
  if (!analysis.verdict.is_edm) {
    throw Error(ErrorCode::kNotEdm,
                "tau(D) is not positive semidefinite (min eigenvalue " +
                    std::to_string(analysis.verdict.psd_defect) + ")");
  }
  const auto r = static_cast<Eigen::Index>(analysis.verdict.embedding_dim);
  const Vector roots = analysis.gram_eigen.values.head(r).cwiseMax(0.0).cwiseSqrt();
  Matrix points = analysis.gram_eigen.vectors.leftCols(r) * roots.asDiagonal();
  return ConfigurationMatrix(std::move(points));
}

ConfigurationMatrix RecoverConfiguration(const DistanceMatrix& d, Tolerance tol) {
  return RecoverConfiguration(AnalyzeEdm(d, tol));
}

Matrix SquaredDistances(const Matrix& points) {
  const Eigen::Index n = points.rows();
  Matrix out = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out(i, j) = out(j, i) = (points.row(i) - points.row(j)).squaredNorm();
    }
  }
  return out;
}

}  // namespace edm
