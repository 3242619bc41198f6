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

#include "clusterq/tomography.hpp"

#include <gtest/gtest.h>

#include "clusterq/error.hpp"
#include "clusterq/fixtures.hpp"
#include "clusterq/random.hpp"
#include "test_util.hpp"

namespace clusterq {
namespace {

using testing::MatrixNear;

TEST(ProbeCount, KnownValues) {
  EXPECT_EQ(required_probe_count({2}).required, 3u);
  EXPECT_EQ(required_probe_count({2, 2}).required, 15u);
  EXPECT_EQ(required_probe_count({2, 3}).required, 35u);
  EXPECT_EQ(required_probe_count({2, 2, 2}).required, 63u);
  EXPECT_EQ(required_probe_count({2, 2, 3}).required, 143u);
  EXPECT_THROW(required_probe_count({}), ValidationError);
  EXPECT_THROW(required_probe_count({2, 1}), ValidationError);
}

TEST(ProbeCount, ProductSetHasOneMoreThanRequired) {
  for (const Dims& dims : std::vector<Dims>{{2}, {2, 2}, {2, 3}, {2, 2, 2}, {3, 3}}) {
    const auto count = required_probe_count(dims);
    EXPECT_EQ(count.product_strings_minus_one, count.required);
    EXPECT_EQ(product_probe_set(dims).size() - 1, count.required);
  }
}

TEST(Dyad, TwoDimensionalHandExpansion) {
  const auto d = dyad_as_projectors(0, 1, 2);
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 1) = 1.0;
  EXPECT_TRUE(MatrixNear(d.reconstruct(), expected, 1e-15));
  // Terms: P(+), P(twisted), and the two diagonal projectors.
  ComplexMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  EXPECT_TRUE(MatrixNear(d.terms[0].projector, plus, 1e-15));
  ComplexMatrix twisted(2, 2);
  twisted << 0.5, cplx(0, 0.5), cplx(0, -0.5), 0.5;
  EXPECT_TRUE(MatrixNear(d.terms[1].projector, twisted, 1e-15));
  EXPECT_EQ(d.terms[1].coefficient, cplx(0, -1));
  EXPECT_EQ(d.terms[2].coefficient, cplx(-0.5, 0.5));
}

TEST(Dyad, EveryPairUpToDimensionFive) {
  for (std::size_t dim = 2; dim <= 5; ++dim) {
    for (std::size_t m = 0; m < dim; ++m) {
      for (std::size_t mp = 0; mp < dim; ++mp) {
        if (m == mp) continue;
        const auto d = dyad_as_projectors(m, mp, dim);
        EXPECT_TRUE(MatrixNear(d.reconstruct(), dyad(basis_ket(dim, m), basis_ket(dim, mp)),
                               1e-12));
        for (const auto& t : d.terms) {
          EXPECT_TRUE(MatrixNear(t.projector * t.projector, t.projector, 1e-15));
          EXPECT_NEAR(trace_of(t.projector).real(), 1.0, 1e-15);
        }
      }
    }
  }
  EXPECT_THROW(dyad_as_projectors(1, 1, 3), ValidationError);
  EXPECT_THROW(dyad_as_projectors(0, 3, 3), ValidationError);
}

TEST(ProbeBasis, QubitGramMatchesHandComputation) {
  const auto b = build_probe_basis(2);
  ASSERT_EQ(b.projectors.size(), 4u);
  ComplexMatrix gram(4, 4);
  gram << 1, 0, 0.5, 0.5,
          0, 1, 0.5, 0.5,
          0.5, 0.5, 1, 0.5,
          0.5, 0.5, 0.5, 1;
  EXPECT_TRUE(MatrixNear(b.gram, gram, 1e-15));
  EXPECT_NEAR(b.gram_determinant.real(), 0.25, 1e-14);
  EXPECT_NEAR(b.gram_determinant.imag(), 0.0, 1e-14);
}

TEST(ProbeBasis, HigherDimensionDeterminants) {
  EXPECT_NEAR(std::abs(build_probe_basis(3).gram_determinant - cplx(1.0 / 64)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(build_probe_basis(4).gram_determinant - cplx(1.0 / 4096)), 0.0, 1e-13);
  EXPECT_EQ(build_probe_basis(5).projectors.size(), 25u);
  EXPECT_THROW(build_probe_basis(1), ValidationError);
}

TEST(ProbeBasis, ProbabilitiesDetermineTheState) {
  Rng rng(41);
  for (std::size_t dim : {2u, 3u, 4u, 5u}) {
    const auto basis = build_probe_basis(dim);
    for (int trial = 0; trial < 5; ++trial) {
      const auto rho = random_density({dim}, 0, rng);
      std::vector<double> p;
      for (const auto& q : basis.projectors) p.push_back(trace_of_product(rho.matrix(), q).real());
      const auto r = reconstruct(p, basis);
      EXPECT_TRUE(r.valid);
      EXPECT_LE(frobenius_distance(r.estimate, rho.matrix()), 1e-10);
    }
  }
}

TEST(Reconstruct, ProductProbesRoundTrip) {
  Rng rng(42);
  for (const Dims& dims : std::vector<Dims>{{2, 2}, {2, 3}, {2, 2, 2}}) {
    const auto probes = product_probe_set(dims);
    for (int trial = 0; trial < 5; ++trial) {
      const auto rho = random_density(dims, 1 + trial, rng);
      const auto r = reconstruct(probe_probabilities(rho, probes), probes, dims);
      EXPECT_TRUE(r.valid);
      EXPECT_GT(r.gram_rcond, 1e-12);
      EXPECT_LE(frobenius_distance(r.estimate, rho.matrix()), 1e-9);
      EXPECT_LE(frobenius_distance(r.state().matrix(), rho.matrix()), 1e-9);
    }
  }
}

TEST(Reconstruct, RejectsWrongProbeCounts) {
  const auto probes = product_probe_set({2, 2});
  const auto rho = as_density(fixture("singlet"));
  auto p = probe_probabilities(rho, probes);
  p.pop_back();
  EXPECT_THROW(reconstruct(p, probes, {2, 2}), ValidationError);
  auto short_probes = probes;
  short_probes.pop_back();
  EXPECT_THROW(reconstruct(p, short_probes, {2, 2}), ValidationError);
}

TEST(Reconstruct, RejectsSingularProbeFamily) {
  auto probes = product_probe_set({2});
  probes[3] = probes[2];
  const std::vector<double> p{0.5, 0.5, 0.5, 0.5};
  EXPECT_THROW(reconstruct(p, probes, {2}), NumericalError);
}

TEST(Reconstruct, InconsistentDataIsFlaggedInvalid) {
  const auto probes = product_probe_set({2});
  // Probabilities no state can produce: both diagonal outcomes certain.
  const auto r = reconstruct({1.0, 1.0, 0.5, 0.5}, probes, {2});
  EXPECT_FALSE(r.valid);
  EXPECT_THROW(r.state(), ValidationError);
}

TEST(LinearIndependence, OperatorBasisIsTraceOrthonormal) {
  for (std::size_t dim : {2u, 3u, 4u}) {
    const auto basis = hermitian_operator_basis(dim);
    ASSERT_EQ(basis.size(), dim * dim);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      EXPECT_LE(hermiticity_error(basis[a]), 0.0);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        EXPECT_NEAR(std::abs(trace_of_product(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)), 0.0,
                    1e-15);
      }
    }
  }
}

TEST(LinearIndependence, ProbeBasesPassAllCriteria) {
  for (std::size_t dim : {2u, 3u, 4u}) {
    const auto li = linear_independence_criteria(build_probe_basis(dim).projectors);
    EXPECT_TRUE(li.null_combination_only);
    EXPECT_TRUE(li.expansion_nonsingular);
    EXPECT_TRUE(li.gram_nonsingular);
    // det(Gram) = det(alpha)^2 for a Hermitian family.
    EXPECT_NEAR(std::abs(li.expansion_determinant * li.expansion_determinant -
                         li.gram_determinant),
                0.0, 1e-12);
  }
}

TEST(LinearIndependence, DependentFamiliesFailAllCriteria) {
  auto ops = build_probe_basis(3).projectors;
  ops.back() = ops[0] + ops[1] - ops[2];
  const auto li = linear_independence_criteria(ops);
  EXPECT_FALSE(li.null_combination_only);
  EXPECT_FALSE(li.expansion_nonsingular);
  EXPECT_FALSE(li.gram_nonsingular);
  // Complementary projectors and the identity are dependent.
  const std::vector<ComplexMatrix> trio{ray_projector(basis_ket(2, 0)),
                                        ray_projector(basis_ket(2, 1)), identity(2)};
  const auto t = linear_independence_criteria(trio);
  EXPECT_FALSE(t.null_combination_only);
  EXPECT_FALSE(t.expansion_nonsingular);
  EXPECT_FALSE(t.gram_nonsingular);
}

TEST(LinearIndependence, RandomFamiliesAgree) {
  Rng rng(43);
  for (std::size_t dim : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<ComplexMatrix> ops;
      const std::size_t q = dim * dim - static_cast<std::size_t>(trial % 2);
      for (std::size_t k = 0; k < q; ++k) ops.push_back(random_ray_projector(dim, rng));
      const auto li = linear_independence_criteria(ops);
      EXPECT_TRUE(li.null_combination_only);
      EXPECT_EQ(li.null_combination_only, li.expansion_nonsingular);
      EXPECT_EQ(li.null_combination_only, li.gram_nonsingular);
    }
  }
}

TEST(LinearIndependence, RejectsMalformedFamilies) {
  EXPECT_THROW(linear_independence_criteria({}), ValidationError);
  EXPECT_THROW(linear_independence_criteria({identity(2), identity(3)}), ValidationError);
  std::vector<ComplexMatrix> too_many(5, identity(2));
  EXPECT_THROW(linear_independence_criteria(too_many), ValidationError);
}

}  // namespace
}  // namespace clusterq
