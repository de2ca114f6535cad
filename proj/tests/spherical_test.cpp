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

#include <cmath>
#include <functional>
#include <vector>

#include <gtest/gtest.h>

#include "edm/errors.hpp"
#include "edm/generators.hpp"
#include "test_support.hpp"

namespace edm {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no edm::Error thrown";
  return ErrorCode::kInvalidArgument;
}

DistanceMatrix G(std::size_t n) { return MakePathEdm(n).matrix; }

DistanceMatrix TwoPoints() { return G(2); }

bool ShiftIsPsd(const DistanceMatrix& d, double lambda) {
  const auto n = static_cast<Eigen::Index>(d.order());
  return IsPsd(SymMatrix::FromDense(Matrix::Constant(n, n, lambda) - d.dense(), 1.0));
}

std::vector<DistanceMatrix> SphericalFamilies() {
  std::vector<DistanceMatrix> out;
  for (std::size_t n = 2; n <= 8; ++n) out.push_back(G(n));
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 4; ++n) out.push_back(ManhattanGrid(m, n));
  for (std::size_t r = 1; r <= 5; ++r) out.push_back(HypercubeHamming(r).matrix);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t r = 1 + seed % 5;
    const std::size_t n = r + 1 + (seed * 7) % 25;
    out.push_back(RandomSphericalEdm(n, r, seed));
  }
  return out;
}

TEST(RadiusSqTest, Examples) {
  EXPECT_NEAR(RadiusSq(TwoPoints()), 0.25, 1e-14);
  EXPECT_NEAR(RadiusSq(G(3)), 0.5, 1e-14);
  EXPECT_NEAR(RadiusSq(ManhattanGrid(3, 4)), 1.25, 1e-13);
}

TEST(RadiusSqTest, PathFamilyClosedForm) {
  for (std::size_t n = 2; n <= 12; ++n) {
    EXPECT_NEAR(RadiusSq(G(n)), 0.25 * static_cast<double>(n - 1), 1e-12) << n;
  }
}

TEST(RadiusSqTest, NotEdm) {
  Matrix m(3, 3);
  m << 0, 1, 9, 1, 0, 1, 9, 1, 0;
  EXPECT_EQ(CodeOf([&] { RadiusSq(DistanceMatrix::FromDense(m)); }), ErrorCode::kNotEdm);
}

TEST(CenterTest, RegularHypercubeIsCentroid) {
  const DistanceMatrix d = HypercubeHamming(2).matrix;
  const Vector a = Center(d, RecoverConfiguration(d));
  EXPECT_LE(a.norm(), 1e-12);
}

TEST(CenterTest, TwoPointsMidpoint) {
  const DistanceMatrix d = TwoPoints();
  const Vector a = Center(d, RecoverConfiguration(d));
  ASSERT_EQ(a.size(), 1);
  EXPECT_NEAR(a(0), 0.0, 1e-15);
}

TEST(CenterTest, PathG3SphereEquation) {
  const DistanceMatrix d = G(3);
  const ConfigurationMatrix p = RecoverConfiguration(d);
  const Vector a = Center(d, p);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR((p.point(i).transpose() - a).squaredNorm(), 0.5, 1e-13);
  }
}

TEST(CenterTest, RejectsNonSphericalAndMismatch) {
  const DistanceMatrix line = CollinearSqEdm(3);
  EXPECT_EQ(CodeOf([&] { Center(line, RecoverConfiguration(line)); }),
            ErrorCode::kNotSpherical);
  EXPECT_EQ(CodeOf([&] { Center(G(4), RecoverConfiguration(G(3))); }),
            ErrorCode::kDimensionMismatch);
}

TEST(MinShiftTest, Examples) {
  EXPECT_NEAR(MinShift(G(3)), 1.0, 1e-13);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      if (m * n < 2) continue;
      EXPECT_NEAR(MinShift(ManhattanGrid(m, n)), 0.5 * static_cast<double>(n + m - 2),
                  1e-12);
    }
  }
  for (std::size_t r = 1; r <= 5; ++r) {
    EXPECT_NEAR(MinShift(HypercubeHamming(r).matrix), 0.5 * static_cast<double>(r), 1e-12);
  }
}

TEST(MinShiftTest, NonSpherical) {
  EXPECT_EQ(CodeOf([] { MinShift(CollinearSqEdm(4)); }), ErrorCode::kNotSpherical);
}

TEST(MinShiftTest, MinimalityBracket) {
  const Tolerance tol;
  for (const DistanceMatrix& d : SphericalFamilies()) {
    const double lambda = MinShift(d, tol);
    EXPECT_TRUE(ShiftIsPsd(d, lambda));
    EXPECT_FALSE(ShiftIsPsd(d, 0.999999 * lambda)) << "order " << d.order();
  }
}

TEST(IsSphericalTest, Examples) {
  for (std::size_t n = 2; n <= 10; ++n) EXPECT_TRUE(IsSpherical(G(n)).spherical) << n;
  const SphericityResult line = IsSpherical(CollinearSqEdm(3));
  EXPECT_FALSE(line.spherical);
  EXPECT_FALSE(line.diagnostics.rank_test);
  EXPECT_FALSE(line.diagnostics.center_test);
  EXPECT_TRUE(IsSpherical(HypercubeHamming(3).matrix).spherical);
  EXPECT_TRUE(IsRegular(HypercubeHamming(3).matrix));
}

TEST(IsSphericalTest, DiagnosticsAgreeOnWellSeparatedInstances) {
  for (const DistanceMatrix& d : SphericalFamilies()) {
    const SphericityResult s = IsSpherical(d);
    EXPECT_TRUE(s.spherical);
    EXPECT_TRUE(s.diagnostics.rank_test);
    EXPECT_TRUE(s.diagnostics.center_test);
    EXPECT_FALSE(s.diagnostics.indeterminate);
  }
  for (std::size_t n = 3; n <= 20; ++n) {
    const SphericityResult s = IsSpherical(CollinearSqEdm(n));
    EXPECT_FALSE(s.spherical);
    EXPECT_FALSE(s.diagnostics.rank_test);
    EXPECT_FALSE(s.diagnostics.center_test);
    EXPECT_FALSE(s.diagnostics.indeterminate);
  }
}

TEST(IsRegularTest, Examples) {
  const DistanceMatrix cube = HypercubeHamming(2).matrix;
  EXPECT_TRUE(IsRegular(cube));
  const Vector de = cube.dense().rowwise().sum();
  EXPECT_EQ(de, Vector::Constant(4, 4.0));
  // Row sums of G3 are (3, 2, 3).
  EXPECT_FALSE(IsRegular(G(3)));
  EXPECT_TRUE(IsRegular(ManhattanGrid(2, 2)));
}

TEST(ClassifyTest, Grid34) {
  const EdmClassification c = Classify(ManhattanGrid(3, 4));
  EXPECT_TRUE(c.verdict.is_edm);
  EXPECT_EQ(c.verdict.embedding_dim, 5u);
  EXPECT_EQ(c.verdict.rank_d, 6u);
  ASSERT_TRUE(c.spherical);
  ASSERT_TRUE(c.sphere.has_value());
  EXPECT_NEAR(c.sphere->radius_sq, 1.25, 1e-12);
  EXPECT_NEAR(c.sphere->min_shift, 2.5, 1e-12);
  EXPECT_FALSE(c.regular);
}

TEST(ClassifyTest, Hypercube3) {
  const EdmClassification c = Classify(HypercubeHamming(3).matrix);
  EXPECT_EQ(c.verdict.embedding_dim, 3u);
  ASSERT_TRUE(c.spherical);
  EXPECT_TRUE(c.regular);
  EXPECT_NEAR(c.sphere->radius_sq, 0.75, 1e-12);
  EXPECT_NEAR(c.sphere->min_shift, 1.5, 1e-12);
  EXPECT_LE(c.sphere->center->norm(), 1e-12);
}

TEST(ClassifyTest, Collinear) {
  const EdmClassification c = Classify(CollinearSqEdm(3));
  EXPECT_TRUE(c.verdict.is_edm);
  EXPECT_EQ(c.verdict.embedding_dim, 1u);
  EXPECT_EQ(c.verdict.rank_d, 3u);
  EXPECT_FALSE(c.spherical);
  EXPECT_FALSE(c.regular);
  EXPECT_FALSE(c.sphere.has_value());
}

TEST(ClassifyTest, ZeroMatrixIsDegenerateSpherical) {
  const EdmClassification c = Classify(DistanceMatrix::Zero(3));
  EXPECT_TRUE(c.verdict.is_edm);
  EXPECT_EQ(c.verdict.embedding_dim, 0u);
  EXPECT_TRUE(c.spherical);
  EXPECT_TRUE(c.regular);
  ASSERT_TRUE(c.sphere.has_value());
  EXPECT_EQ(c.sphere->radius, 0.0);
  EXPECT_EQ(c.sphere->min_shift, 0.0);
}

TEST(ClassifyTest, NonEdm) {
  Matrix m(3, 3);
  m << 0, 1, 9, 1, 0, 1, 9, 1, 0;
  const EdmClassification c = Classify(m);
  EXPECT_FALSE(c.verdict.is_edm);
  EXPECT_FALSE(c.spherical);
  EXPECT_FALSE(c.sphere.has_value());
}

TEST(ClassifyTest, InvalidMatrix) {
  Matrix m(2, 2);
  m << 0, -1, -1, 0;
  EXPECT_EQ(CodeOf([&] { Classify(m); }), ErrorCode::kInvalidMatrix);
}

TEST(ClassifyTest, ThreeRadiusFormulasAgree) {
  for (const DistanceMatrix& d : SphericalFamilies()) {
    const EdmClassification c = Classify(d);
    ASSERT_TRUE(c.spherical);
    const double n = static_cast<double>(d.order());
    const double eq6 = c.sphere->radius_sq;
    const Vector& a = *c.sphere->center;
    const double via_center = a.squaredNorm() + d.dense().sum() / (2.0 * n * n);
    const ConfigurationMatrix p = RecoverConfiguration(d);
    double farthest = 0.0;
    for (std::size_t i = 0; i < d.order(); ++i) {
      farthest = std::max(farthest, (p.point(i).transpose() - a).squaredNorm());
    }
    EXPECT_NEAR(via_center, eq6, 1e-8 * eq6);
    EXPECT_NEAR(farthest, eq6, 1e-8 * eq6);
    EXPECT_NEAR(c.sphere->min_shift, 2.0 * eq6, 1e-15 * eq6 + 1e-300);
    if (c.regular) EXPECT_LE(a.norm(), 1e-8 * EntryScale(d.dense()));
  }
}

TEST(ClassifyTest, CenterSolvesCenteredSphereSystem) {
  for (const DistanceMatrix& d : SphericalFamilies()) {
    const EdmClassification c = Classify(d);
    const ConfigurationMatrix p = RecoverConfiguration(d);
    const Vector diag = Tau(d).dense().diagonal();
    const Vector rhs = 0.5 * (diag.array() - diag.mean()).matrix();
    EXPECT_LE((p.points() * *c.sphere->center - rhs).norm(), 1e-8 * EntryScale(d.dense()));
  }
}

TEST(ClassifyTest, StaircaseFrameAgreesWithRecoveredFrame) {
  // The staircase points are not centered; after centering they generate
  // the same matrix, and their sphere has the same radius.
  for (std::size_t n = 2; n <= 8; ++n) {
    const PathEdm path = MakePathEdm(n);
    const double rho_sq = 0.25 * static_cast<double>(n - 1);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
      EXPECT_DOUBLE_EQ((path.staircase.row(i).transpose() - path.center).squaredNorm(),
                       rho_sq);
    }
    EXPECT_NEAR(Classify(path.matrix).sphere->radius_sq, rho_sq, 1e-12);
  }
}

}  // namespace
}  // namespace edm
