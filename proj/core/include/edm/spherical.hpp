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

// Spherical and regular EDMs.
//
// An EDM is spherical when its generating points lie on a common
// hypersphere, and regular when that sphere is centered at the centroid.
// For a spherical D of order n with radius rho:
//
//   rho^2   = e^T D e / 2n^2 + e^T D tau(D)^+ D e / 4n^2
//   a       = P^+ D e / 2n             (center, in the frame of P)
//   lambda* = 2 rho^2                  (smallest lambda with lambda E - D PSD)
//
// The center is expressed in the frame returned by RecoverConfiguration.

#ifndef EDM_SPHERICAL_HPP_
#define EDM_SPHERICAL_HPP_

#include <optional>

#include "edm/edm_core.hpp"
#include "edm/matrix_kernel.hpp"

namespace edm {

struct SphereInfo {
  double radius = 0.0;
  double radius_sq = 0.0;
  // Unset when the frame is not known (e.g. composed spheres).
  std::optional<Vector> center;
  double min_shift = 0.0;
};

struct SphericityDiagnostics {
  // rank(D) == r + 1.
  bool rank_test = false;
  // 2 rho^2 E - D is PSD with rho^2 from the closed-form radius. This is the
  // test that decides sphericality.
  bool psd_shift_test = false;
  // Least-squares residual of P a = 1/2 J diag(tau(D)).
  double center_residual = 0.0;
  bool center_test = false;
  // Smallest eigenvalue of 2 rho^2 E - D.
  double shift_margin = 0.0;
  // Set when the shift test failed by less than 10x its threshold, or the
  // three tests disagree.
  bool indeterminate = false;
};

struct SphericityResult {
  bool spherical = false;
  SphericityDiagnostics diagnostics;
};

struct EdmClassification {
  EdmVerdict verdict;
  bool spherical = false;
  bool regular = false;
  std::optional<SphereInfo> sphere;  // present iff spherical
  SphericityDiagnostics diagnostics;
  Tolerance tolerance;
};

// Closed-form squared radius. Throws NotEdm for non-EDM input. The formula
// is defined for every EDM; it is the circumradius only when D is spherical.
double RadiusSq(const DistanceMatrix& d, Tolerance tol = {});

// Center of the circumscribing sphere, (P^T P)^{-1} P^T D e / 2n.
// Throws NotSpherical if D is not spherical, DimensionMismatch if P does not
// have n rows.
Vector Center(const DistanceMatrix& d, const ConfigurationMatrix& p,
              Tolerance tol = {});

// lambda* = 2 rho^2. Throws NotSpherical if D is not spherical.
double MinShift(const DistanceMatrix& d, Tolerance tol = {});

// Throws NotEdm for non-EDM input.
SphericityResult IsSpherical(const DistanceMatrix& d, Tolerance tol = {});

// True iff |De - (e^T D e / n) e|_max <= tol.rel * max(1, |De|_max).
// Throws NotEdm for non-EDM input.
bool IsRegular(const DistanceMatrix& d, Tolerance tol = {});

// Full report. D = 0 is classified spherical and regular with rho = 0, r = 0.
EdmClassification Classify(const DistanceMatrix& d, Tolerance tol = {});
// Validates `m` as a distance matrix first (InvalidMatrix on failure).
EdmClassification Classify(const Matrix& m, Tolerance tol = {});

}  // namespace edm

#endif  // EDM_SPHERICAL_HPP_
