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

#include "edm/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "edm/errors.hpp"

namespace edm {
namespace {

void RequireEdm(const EdmAnalysis& analysis) {
  if (!analysis.verdict.is_edm) {
    throw Error(ErrorCode::kNotEdm,
                "tau(D) has negative eigenvalue " +
                    std::to_string(analysis.verdict.psd_defect));
  }
}

bool IsZero(const DistanceMatrix& d) { return MaxAbsEntry(d.dense()) == 0.0; }

double RadiusSqFrom(const DistanceMatrix& d, const EdmAnalysis& analysis,
                    Tolerance tol) {
  const Matrix& dense = d.dense();
  const double n = static_cast<double>(d.order());
  const Vector de = dense.rowwise().sum();
  const double ede = de.sum();
  const Matrix gram_pinv = Pinv(analysis.gram_eigen, tol).dense();
  const double quad = de.dot(gram_pinv * de);
  return ede / (2.0 * n * n) + quad / (4.0 * n * n);
}

// (P^T P)^{-1} P^T D e / 2n; an empty vector when r = 0.
Vector CenterFrom(const DistanceMatrix& d, const Matrix& p) {
  if (p.cols() == 0) return Vector();
  const double n = static_cast<double>(d.order());
  const Vector de = d.dense().rowwise().sum();
  const Matrix normal = p.transpose() * p;
  return normal.ldlt().solve(p.transpose() * de) / (2.0 * n);
}

SphericityResult SphericityFrom(const DistanceMatrix& d,
                                const EdmAnalysis& analysis, Tolerance tol) {
  RequireEdm(analysis);
  SphericityResult out;
  SphericityDiagnostics& diag = out.diagnostics;
  const Matrix& dense = d.dense();
  const auto n = static_cast<Eigen::Index>(d.order());

  diag.rank_test = analysis.verdict.rank_d == analysis.verdict.embedding_dim + 1;

  const double radius_sq = RadiusSqFrom(d, analysis, tol);
  const Matrix shifted = Matrix::Constant(n, n, 2.0 * radius_sq) - dense;
  const EigenDecomposition shifted_eigen =
      SymEigen(SymMatrix::FromDense(shifted, 1.0));
  diag.psd_shift_test = IsPsd(shifted_eigen, tol);
  diag.shift_margin = shifted_eigen.values(n - 1);

  const Matrix p = RecoverConfiguration(analysis).points();
  const Vector gram_diag = analysis.gram.dense().diagonal();
  const Vector target = 0.5 * (gram_diag.array() - gram_diag.mean()).matrix();
  Vector fitted = Vector::Zero(n);
  if (p.cols() > 0) {
    const Vector ls = (p.transpose() * p).ldlt().solve(p.transpose() * target);
    fitted = p * ls;
  }
  diag.center_residual = (fitted - target).norm();
  diag.center_test = diag.center_residual <= tol.Threshold(MaxAbsEntry(dense));

  out.spherical = diag.psd_shift_test;

  const double threshold = tol.Threshold(std::abs(shifted_eigen.values(0)));
  const bool near_boundary =
      diag.shift_margin < -threshold && diag.shift_margin >= -10.0 * threshold;
  const bool disagree = diag.rank_test != diag.psd_shift_test ||
                        diag.center_test != diag.psd_shift_test;
  diag.indeterminate = near_boundary || disagree;
  return out;
}

bool RegularFrom(const DistanceMatrix& d, const EdmAnalysis& analysis,
                 Tolerance tol) {
  RequireEdm(analysis);
  const Vector de = d.dense().rowwise().sum();
  const double mean = de.mean();
  const double deviation = (de.array() - mean).abs().maxCoeff();
  return deviation <= tol.Threshold(de.cwiseAbs().maxCoeff());
}

}  // namespace

double RadiusSq(const DistanceMatrix& d, Tolerance tol) {
  const EdmAnalysis analysis = AnalyzeEdm(d, tol);
  RequireEdm(analysis);
  return RadiusSqFrom(d, analysis, tol);
}

Vector Center(const DistanceMatrix& d, const ConfigurationMatrix& p,
              Tolerance tol) {
  if (p.size() != d.order()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "configuration has " + std::to_string(p.size()) +
                    " points, distance matrix has order " +
                    std::to_string(d.order()));
  }
  const EdmAnalysis analysis = AnalyzeEdm(d, tol);
  if (!IsZero(d) && !SphericityFrom(d, analysis, tol).spherical) {
    throw Error(ErrorCode::kNotSpherical, "points do not lie on a common sphere");
  }
  return CenterFrom(d, p.points());
}

double MinShift(const DistanceMatrix& d, Tolerance tol) {
  const EdmAnalysis analysis = AnalyzeEdm(d, tol);
  RequireEdm(analysis);
  if (IsZero(d)) return 0.0;
  if (!SphericityFrom(d, analysis, tol).spherical) {
    throw Error(ErrorCode::kNotSpherical,
                "no lambda makes lambda E - D positive semidefinite");
  }
  return 2.0 * RadiusSqFrom(d, analysis, tol);
}

SphericityResult IsSpherical(const DistanceMatrix& d, Tolerance tol) {
  return SphericityFrom(d, AnalyzeEdm(d, tol), tol);
}

bool IsRegular(const DistanceMatrix& d, Tolerance tol) {
  return RegularFrom(d, AnalyzeEdm(d, tol), tol);
}

EdmClassification Classify(const DistanceMatrix& d, Tolerance tol) {
  EdmClassification out;
  out.tolerance = tol;
  const EdmAnalysis analysis = AnalyzeEdm(d, tol);
  out.verdict = analysis.verdict;
  if (!analysis.verdict.is_edm) return out;

  if (IsZero(d)) {
    out.spherical = true;
    out.regular = true;
    out.diagnostics.psd_shift_test = true;
    out.diagnostics.center_test = true;
    out.sphere = SphereInfo{0.0, 0.0, Vector(), 0.0};
    return out;
  }

  const SphericityResult sphericity = SphericityFrom(d, analysis, tol);
  out.diagnostics = sphericity.diagnostics;
  out.spherical = sphericity.spherical;
  if (!out.spherical) return out;

  const double radius_sq = RadiusSqFrom(d, analysis, tol);
  const ConfigurationMatrix p = RecoverConfiguration(analysis);
  SphereInfo sphere;
  sphere.radius_sq = radius_sq;
  sphere.radius = std::sqrt(std::max(0.0, radius_sq));
  sphere.center = CenterFrom(d, p.points());
  sphere.min_shift = 2.0 * radius_sq;
  out.sphere = std::move(sphere);
  out.regular = RegularFrom(d, analysis, tol);
  return out;
}

EdmClassification Classify(const Matrix& m, Tolerance tol) {
  return Classify(DistanceMatrix::FromDense(m), tol);
}

}  // namespace edm
