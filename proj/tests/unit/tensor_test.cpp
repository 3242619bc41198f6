// Copyright 2026 The clusterq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clusterq/tensor.hpp"

#include <gtest/gtest.h>

#include "clusterq/error.hpp"
#include "clusterq/fixtures.hpp"
#include "clusterq/random.hpp"
#include "test_util.hpp"

namespace clusterq {
namespace {

using testing::MatrixNear;

ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_TRUE(MatrixNear(kron(identity(2), identity(2)), identity(4), 0.0));
}

TEST(Kron, BasisDyadPlacesOnes) {
  const ComplexMatrix k = kron(mat2(0, 1, 0, 0), identity(2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 2) = 1.0;
  expected(1, 3) = 1.0;
  EXPECT_TRUE(MatrixNear(k, expected, 0.0));
}

TEST(Kron, PlusMinusProjectorsHaveUnitTrace) {
  const ComplexMatrix k = kron(ray_projector(x_ket(true)), ray_projector(x_ket(false)));
  EXPECT_TRUE(MatrixNear(k, testing::naive_kron(ray_projector(x_ket(true)),
                                                ray_projector(x_ket(false))), 1e-15));
  EXPECT_NEAR(trace_of(k).real(), 1.0, 1e-15);
}

TEST(Kron, AssociativeBilinearAndTraceMultiplicative) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_ginibre(2, 2, rng);
    const auto b = random_ginibre(3, 3, rng);
    const auto c = random_ginibre(2, 2, rng);
    const cplx s(0.3, -1.2);
    EXPECT_TRUE(MatrixNear(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-12));
    EXPECT_TRUE(MatrixNear(kron(a + s * c, b), kron(a, b) + s * kron(c, b), 1e-12));
    EXPECT_NEAR(std::abs(trace_of(kron(a, b)) - trace_of(a) * trace_of(b)), 0.0, 1e-11);
    EXPECT_TRUE(MatrixNear(kron(a, b), testing::naive_kron(a, b), 1e-14));
  }
}

TEST(PartialTrace, SingletMarginalIsMaximallyMixed) {
  const ComplexMatrix rho = singlet().density().matrix();
  EXPECT_TRUE(MatrixNear(partial_trace(rho, {2, 2}, {0}), identity(2) / 2.0, 1e-15));
  EXPECT_TRUE(MatrixNear(partial_trace(rho, {2, 2}, {0}),
                         testing::naive_partial_trace(rho, {2, 2}, {0}), 1e-15));
}

TEST(PartialTrace, ProductFactorizes) {
  Rng rng(2);
  const auto a = random_ginibre(2, 2, rng);
  const auto b = random_ginibre(3, 3, rng);
  EXPECT_TRUE(MatrixNear(partial_trace(kron(a, b), {2, 3}, {0}), a * trace_of(b), 1e-12));
  EXPECT_TRUE(MatrixNear(partial_trace(kron(a, b), {2, 3}, {1}), b * trace_of(a), 1e-12));
}

TEST(PartialTrace, KeepAllIsIdentity) {
  Rng rng(3);
  const auto m = random_ginibre(12, 12, rng);
  EXPECT_TRUE(MatrixNear(partial_trace(m, {2, 3, 2}, {0, 1, 2}), m, 0.0));
}

TEST(PartialTrace, MatchesDigitOracleOnRandomLayouts) {
  Rng rng(4);
  const Dims dims{2, 3, 2};
  const auto m = random_ginibre(12, 12, rng);
  for (const IndexSet& keep : std::vector<IndexSet>{{0}, {1}, {2}, {0, 2}, {1, 2}, {2, 0}}) {
    const auto got = partial_trace(m, dims, keep);
    EXPECT_TRUE(MatrixNear(got, testing::naive_partial_trace(m, dims, keep), 1e-12));
    EXPECT_NEAR(std::abs(trace_of(got) - trace_of(m)), 0.0, 1e-11);
  }
}

TEST(PartialTrace, RejectsDimensionMismatch) {
  EXPECT_THROW(partial_trace(identity(4), {2, 3}, {0}), ValidationError);
  EXPECT_THROW(partial_trace(identity(4), {2, 2}, {2}), ValidationError);
  EXPECT_THROW(partial_trace(identity(4), {2, 2}, {0, 0}), ValidationError);
}

TEST(PermuteSubsystems, SwapIsInvolutionAndMovesFactors) {
  Rng rng(5);
  const auto a = random_ginibre(2, 2, rng);
  const auto b = random_ginibre(3, 3, rng);
  const auto ab = kron(a, b);
  EXPECT_TRUE(MatrixNear(permute_subsystems(ab, {2, 3}, {1, 0}), kron(b, a), 1e-14));
  EXPECT_TRUE(MatrixNear(
      permute_subsystems(permute_subsystems(ab, {2, 3}, {1, 0}), {3, 2}, {1, 0}), ab, 0.0));
  EXPECT_THROW(permute_subsystems(ab, {2, 3}, {0, 0}), ValidationError);
}

TEST(Embed, AgreesWithKronAndPermutation) {
  Rng rng(6);
  const auto op = random_ginibre(4, 4, rng);
  // op on subsystems {0, 2} of a 2x3x2 system.
  const ComplexMatrix via_perm =
      permute_subsystems(kron(op, identity(3)), {2, 2, 3}, {0, 2, 1});
  EXPECT_TRUE(MatrixNear(embed(op, {2, 3, 2}, {0, 2}), via_perm, 1e-14));
  EXPECT_THROW(embed(op, {2, 3, 2}, {0, 1}), ValidationError);
}

TEST(HermitianEig, IdentityAndDegenerateSpectrum) {
  const auto e = hermitian_eig(identity(2));
  EXPECT_NEAR(e.eigenvalues(0), 1.0, 1e-15);
  EXPECT_NEAR(e.eigenvalues(1), 1.0, 1e-15);
  const auto q = hermitian_eig(identity(4) / 4.0);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(q.eigenvalues(i), 0.25, 1e-15);
}

TEST(HermitianEig, PauliXHasEigenvaluesMinusOneAndOne) {
  // det(sigma_x - l I) = l^2 - 1.
  const auto e = hermitian_eig(mat2(0, 1, 1, 0));
  EXPECT_NEAR(e.eigenvalues(0), -1.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues(1), 1.0, 1e-14);
}

TEST(HermitianEig, RejectsNonHermitian) {
  EXPECT_THROW(hermitian_eig(mat2(0, 1, 0, 0)), ValidationError);
}

TEST(HermitianEig, ReconstructsRandomHermitian) {
  Rng rng(7);
  for (std::size_t d : {1u, 2u, 5u, 16u}) {
    const auto h = random_hermitian(d, rng);
    const auto e = hermitian_eig(h);
    const ComplexMatrix back =
        e.eigenvectors * e.eigenvalues.cast<cplx>().asDiagonal() * e.eigenvectors.adjoint();
    EXPECT_LE((h - back).norm(), 1e-10 * std::max(1.0, h.norm()));
    EXPECT_TRUE(MatrixNear(e.eigenvectors.adjoint() * e.eigenvectors, identity(d), 1e-10));
    for (Eigen::Index i = 1; i < e.eigenvalues.size(); ++i) {
      EXPECT_LE(e.eigenvalues(i - 1), e.eigenvalues(i));
    }
  }
}

TEST(MatrixSqrt, KnownCases) {
  EXPECT_TRUE(MatrixNear(matrix_sqrt_psd(identity(2) / 2.0), identity(2) / std::sqrt(2.0), 1e-15));
  const ComplexMatrix p = ray_projector(x_ket(true));
  EXPECT_TRUE(MatrixNear(matrix_sqrt_psd(p), p, 1e-14));
  EXPECT_TRUE(MatrixNear(matrix_sqrt_psd(mat2(4, 0, 0, 9)), mat2(2, 0, 0, 3), 1e-14));
}

TEST(MatrixSqrt, SquaresBackForRandomPsd) {
  Rng rng(8);
  for (std::size_t d : {2u, 3u, 8u, 16u}) {
    const auto g = random_ginibre(d, d / 2 + 1, rng);
    const ComplexMatrix m = g * g.adjoint();
    const auto r = matrix_sqrt_psd(m);
    EXPECT_LE((r * r - m).norm(), 1e-9);
  }
}

TEST(MatrixSqrt, RejectsNegativeEigenvalue) {
  EXPECT_THROW(matrix_sqrt_psd(mat2(1, 0, 0, -1e-6)), NumericalError);
  EXPECT_NO_THROW(matrix_sqrt_psd(mat2(1, 0, 0, -1e-12)));
}

TEST(Basics, TraceDistanceAdjoint) {
  EXPECT_NEAR(trace_of(identity(4)).real(), 4.0, 0.0);
  Rng rng(9);
  const auto a = random_ginibre(3, 3, rng);
  EXPECT_EQ(frobenius_distance(a, a), 0.0);
  EXPECT_TRUE(MatrixNear(adjoint(dyad(basis_ket(2, 0), basis_ket(2, 1))),
                         dyad(basis_ket(2, 1), basis_ket(2, 0)), 0.0));
  EXPECT_THROW(frobenius_distance(a, identity(2)), ValidationError);
  EXPECT_NEAR(std::abs(trace_of_product(a, a.adjoint()) - trace_of(a * a.adjoint())), 0.0, 1e-12);
}

}  // namespace
}  // namespace clusterq
