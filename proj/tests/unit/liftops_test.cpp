// Copyright 2026 The lopc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lopc/liftops.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "lopc/errors.hpp"
#include "support/testing.hpp"

namespace lopc {
namespace {

using testing::haar_unitary;
using testing::kPi;
using testing::Rng;

ComplexMatrix half_pauli(int k) { return ComplexMatrix(pauli(k)) / 2.0; }

ComplexMatrix balanced_bs() {
  ComplexMatrix u(2, 2);
  u << 1, 1, 1, -1;
  return u / std::sqrt(2.0);
}

TEST(JsGenerator, HalfSigmaThreeOnOnePhoton) {
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 0.5;
  expected(1, 1) = -0.5;
  EXPECT_LE(max_abs_diff(js_generator(half_pauli(3), FockBasis(2, 1)), expected),
            1e-15);
}

TEST(JsGenerator, IdentityIsPhotonNumber) {
  for (int n = 0; n <= 5; ++n) {
    const FockBasis b(2, n);
    const ComplexMatrix q = js_generator(ComplexMatrix::Identity(2, 2), b);
    EXPECT_LE(max_abs_diff(q, double(n) * ComplexMatrix::Identity(
                                              b.size(), b.size())),
              1e-15);
  }
}

TEST(JsGenerator, HalfSigmaOneOnTwoPhotons) {
  ComplexMatrix expected(3, 3);
  const double h = std::sqrt(2.0) / 2;
  expected << 0, h, 0, h, 0, h, 0, h, 0;
  const ComplexMatrix q = js_generator(half_pauli(1), FockBasis(2, 2));
  EXPECT_LE(max_abs_diff(q, expected), 1e-15);
  EXPECT_NEAR(q(0, 1).real(), h, 1e-15);  // <(2,0)|Q|(1,1)>
}

TEST(JsGenerator, MatchesTruncatedLadderOracle) {
  Rng rng(11);
  for (int modes = 1; modes <= 3; ++modes) {
    for (int n = 0; n <= 3; ++n) {
      const ComplexMatrix j = testing::random_hermitian(modes, rng);
      const ComplexMatrix q = js_generator(j, FockBasis(modes, n));
      EXPECT_LE(max_abs_diff(q, testing::oracle::js_generator(j, n)), 1e-12);
      EXPECT_LE(hermiticity_defect(q), 1e-10);
    }
  }
}

TEST(JsGenerator, RejectsBadGenerators) {
  ComplexMatrix nh(2, 2);
  nh << 0, 1, 0, 0;
  EXPECT_THROW(js_generator(nh, FockBasis(2, 1)), InvalidArgument);
  EXPECT_THROW(js_generator(ComplexMatrix::Identity(3, 3), FockBasis(2, 1)),
               InvalidArgument);
}

TEST(LogUnitary, IdentityAndDiagonal) {
  EXPECT_LE(log_unitary(ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(),
            1e-15);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = std::polar(1.0, kPi / 3);
  d(1, 1) = std::polar(1.0, -kPi / 3);
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = kPi / 3;
  expected(1, 1) = -kPi / 3;
  EXPECT_LE(max_abs_diff(log_unitary(d), expected), 1e-14);
}

TEST(LogUnitary, BranchCutMapsToPlusPi) {
  const ComplexMatrix minus = -ComplexMatrix::Identity(3, 3);
  EXPECT_LE(max_abs_diff(log_unitary(minus),
                         kPi * ComplexMatrix::Identity(3, 3)),
            1e-12);
}

TEST(LogUnitary, ReconstructsRandomUnitariesWithPrincipalPhases) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    const ComplexMatrix u = haar_unitary(n, rng);
    const ComplexMatrix j = log_unitary(u);
    EXPECT_LE(hermiticity_defect(j), 1e-12);
    const ComplexMatrix ij = Complex(0, 1) * j;
    EXPECT_LE(max_abs_diff(testing::oracle::expm(ij), u), 1e-9);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(j);
    EXPECT_GT(es.eigenvalues().minCoeff(), -kPi - 1e-9);
    EXPECT_LE(es.eigenvalues().maxCoeff(), kPi + 1e-9);
  }
}

TEST(LogUnitary, RejectsNonUnitary) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 0.1;
  EXPECT_THROW(log_unitary(m), ToleranceError);
  EXPECT_THROW(log_unitary(ComplexMatrix::Identity(2, 3)), InvalidArgument);
}

TEST(ExpIHermitian, MatchesTaylorOracle) {
  Rng rng(5);
  for (int n = 1; n <= 6; ++n) {
    const ComplexMatrix h = testing::random_hermitian(n, rng, 2.0);
    const ComplexMatrix ih = Complex(0, 1) * h;
    EXPECT_LE(max_abs_diff(exp_i_hermitian(h), testing::oracle::expm(ih)),
              1e-11);
  }
}

TEST(LiftUnitary, VacuumIsFixed) {
  Rng rng(1);
  const auto lifted = lift_unitary(haar_unitary(4, rng), 0);
  ASSERT_EQ(lifted.matrix.rows(), 1);
  EXPECT_NEAR(std::abs(lifted.matrix(0, 0) - Complex(1, 0)), 0.0, 1e-15);
}

TEST(LiftUnitary, OnePhotonBlockIsTheModeMatrix) {
  Rng rng(2);
  const int sizes[] = {2, 3, 4, 8};
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix u = haar_unitary(sizes[trial % 4], rng);
    EXPECT_LE(max_abs_diff(lift_unitary(u, 1).matrix, u), 1e-9);
  }
}

TEST(LiftUnitary, BalancedBeamSplitterTwoPhotons) {
  const auto lifted = lift_unitary(balanced_bs(), 2);
  const FockBasis& b = lifted.basis;
  const std::size_t in = b.index_of({1, 1});
  const double r = 1 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(lifted.matrix(0, in) - Complex(r, 0)), 0, 1e-12);
  EXPECT_NEAR(std::abs(lifted.matrix(1, in)), 0, 1e-12);
  EXPECT_NEAR(std::abs(lifted.matrix(2, in) - Complex(-r, 0)), 0, 1e-12);
}

TEST(LiftUnitary, AgreesWithPermanentOracles) {
  Rng rng(7);
  for (int modes = 1; modes <= 4; ++modes) {
    for (int n = 0; n <= 3; ++n) {
      for (int trial = 0; trial < 3; ++trial) {
        const ComplexMatrix u = haar_unitary(modes, rng);
        const auto lifted = lift_unitary(u, n);
        const FockBasis& b = lifted.basis;
        EXPECT_LE(unitarity_defect(lifted.matrix), 1e-9 * double(b.size()));
        for (std::size_t r = 0; r < b.size(); ++r) {
          for (std::size_t c = 0; c < b.size(); ++c) {
            const Complex ryser = permanent_amplitude(u, b[r], b[c]);
            const std::vector<int> out(b[r].occupations().begin(),
                                       b[r].occupations().end());
            const std::vector<int> in(b[c].occupations().begin(),
                                      b[c].occupations().end());
            const Complex naive = testing::oracle::amplitude(u, out, in);
            EXPECT_LE(std::abs(lifted.matrix(r, c) - ryser), 1e-8);
            EXPECT_LE(std::abs(ryser - naive), 1e-12);
          }
        }
      }
    }
  }
}

TEST(LiftUnitary, IsAHomomorphism) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const int modes = 2 + trial % 3;
    const int n = 1 + trial % 3;
    const ComplexMatrix u1 = haar_unitary(modes, rng);
    const ComplexMatrix u2 = haar_unitary(modes, rng);
    const ComplexMatrix product = u1 * u2;
    const ComplexMatrix lhs = lift_unitary(product, n).matrix;
    const ComplexMatrix rhs =
        lift_unitary(u1, n).matrix * lift_unitary(u2, n).matrix;
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-8);
  }
}

TEST(LiftUnitary, IndependentOfLogarithmBranch) {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int modes = 2 + trial % 3;
    const int n = 1 + trial % 3;
    const ComplexMatrix u = haar_unitary(modes, rng);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(log_unitary(u));
    Eigen::VectorXd w = es.eigenvalues();
    w(trial % modes) += 2 * kPi;
    const ComplexMatrix shifted =
        es.eigenvectors() * w.cast<Complex>().asDiagonal() *
        es.eigenvectors().adjoint();
    EXPECT_LE(max_abs_diff(lift_generator(shifted, n).matrix,
                           lift_unitary(u, n).matrix),
              1e-8);
  }
}

TEST(LiftUnitary, EnforcesDimensionCap) {
  LiftOptions opts;
  opts.dim_cap = 5;
  EXPECT_THROW(lift_unitary(ComplexMatrix::Identity(3, 3), 2, opts),
               CapExceeded);
  EXPECT_THROW(lift_unitary(ComplexMatrix::Identity(3, 3), -1), InvalidArgument);
}

TEST(Permanent, MatchesPermutationSum) {
  Rng rng(17);
  for (int n = 1; n <= 7; ++n) {
    const ComplexMatrix m = ComplexMatrix::Random(n, n);
    EXPECT_LE(std::abs(permanent(m) - testing::oracle::permanent(m)),
              1e-11 * std::max(1.0, std::abs(testing::oracle::permanent(m))));
  }
  EXPECT_EQ(permanent(ComplexMatrix(0, 0)), Complex(1, 0));
}

TEST(PermanentAmplitude, Examples) {
  EXPECT_NEAR(std::abs(permanent_amplitude(ComplexMatrix::Identity(3, 3),
                                           {1, 0, 2}, {1, 0, 2}) -
                       Complex(1, 0)),
              0, 1e-15);
  ComplexMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_NEAR(std::abs(permanent_amplitude(swap, {0, 1}, {1, 0}) - Complex(1, 0)),
              0, 1e-15);
  EXPECT_NEAR(std::abs(permanent_amplitude(balanced_bs(), {1, 1}, {1, 1})), 0,
              1e-15);
}

TEST(PermanentAmplitude, SinglePhotonIsAnEntry) {
  Rng rng(19);
  const ComplexMatrix u = haar_unitary(4, rng);
  EXPECT_EQ(permanent_amplitude(u, {0, 0, 1, 0}, {0, 1, 0, 0}), u(2, 1));
}

TEST(PermanentAmplitude, RejectsBadArguments) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  EXPECT_THROW(permanent_amplitude(id, {1, 0}, {1, 1}), InvalidArgument);
  EXPECT_THROW(permanent_amplitude(id, {1, 0, 0}, {1, 0}), InvalidArgument);
  EXPECT_THROW(permanent_amplitude(id, {13, 0}, {13, 0}), CapExceeded);
}

TEST(Su2Fixtures, OnePhotonReproducesHalfPaulis) {
  const auto g = su2_fixtures(1);
  EXPECT_LE(max_abs_diff(g.j1, half_pauli(1)), 1e-15);
  EXPECT_LE(max_abs_diff(g.j2, half_pauli(2)), 1e-15);
  EXPECT_LE(max_abs_diff(g.j3, half_pauli(3)), 1e-15);
  EXPECT_LE(max_abs_diff(g.number, ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(Su2Fixtures, VacuumBlocksAreZero) {
  const auto g = su2_fixtures(0);
  for (const ComplexMatrix* m : {&g.j1, &g.j2, &g.j3, &g.number}) {
    ASSERT_EQ(m->rows(), 1);
    EXPECT_EQ((*m)(0, 0), Complex(0, 0));
  }
}

TEST(Su2Fixtures, AngularMomentumAlgebra) {
  const Complex i(0, 1);
  for (int n = 0; n <= 4; ++n) {
    const auto g = su2_fixtures(n);
    const ComplexMatrix* j[] = {&g.j1, &g.j2, &g.j3};
    for (int a = 0; a < 3; ++a) {
      const int b = (a + 1) % 3;
      const int c = (a + 2) % 3;
      const ComplexMatrix comm = *j[a] * *j[b] - *j[b] * *j[a];
      const ComplexMatrix expected = i * *j[c];
      EXPECT_LE(max_abs_diff(comm, expected), 1e-10);
      const ComplexMatrix with_n = *j[a] * g.number - g.number * *j[a];
      EXPECT_LE(with_n.cwiseAbs().maxCoeff(), 1e-10);
    }
    const ComplexMatrix casimir = g.j1 * g.j1 + g.j2 * g.j2 + g.j3 * g.j3;
    const double h = n / 2.0;
    EXPECT_LE(max_abs_diff(casimir, h * (h + 1) * ComplexMatrix::Identity(
                                                      n + 1, n + 1)),
              1e-10);
  }
}

}  // namespace
}  // namespace lopc
