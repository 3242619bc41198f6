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

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "clusterq/correlations.hpp"
#include "clusterq/partition.hpp"
#include "clusterq/state.hpp"
#include "clusterq/tensor.hpp"

namespace clusterq {

struct ProbeCount {
  /// (prod M_k)^2 - 1 independent real parameters of a state.
  std::size_t required = 0;
  /// prod_k M_k^2 - 1: product strings over per-subsystem probe bases,
  /// minus the all-identity string.
  std::size_t product_strings_minus_one = 0;
};

ProbeCount required_probe_count(const Dims& dims);

/// |m><m'| written as a combination of four ray projectors.
struct DyadDecomposition {
  struct Term {
    cplx coefficient;
    ComplexMatrix projector;
  };
  std::array<Term, 4> terms;

  ComplexMatrix reconstruct() const;
};

/// For m < m' uses the superposition rays (|m> + |m'>)/sqrt2 and
/// (|m> - i|m'>)/sqrt2 with coefficients 1 and -i, plus both diagonal
/// projectors with coefficient (i - 1)/2. For m > m' returns the adjoint
/// decomposition. m == m' is rejected.
DyadDecomposition dyad_as_projectors(std::size_t m, std::size_t mp, std::size_t dim);

/// M^2 rank-one projectors spanning operator space on C^M: the M diagonal
/// projectors, then the two superposition projectors of each pair m < m'.
struct ProbeBasis {
  std::vector<ComplexMatrix> projectors;
  ComplexMatrix gram;  // tr(P_q P_q')
  cplx gram_determinant;
};

ProbeBasis build_probe_basis(std::size_t dim);

/// All prod_k M_k^2 product strings over the maximal decomposition, with
/// subsystem 1 varying slowest. Entry k of each string is a projector from
/// build_probe_basis(dims[k]).
std::vector<EventString> product_probe_set(const Dims& dims);

/// Exact probabilities tr(rho Q) for each probe string, in probe order.
std::vector<double> probe_probabilities(const DensityOperator& rho,
                                        const std::vector<EventString>& probes);

struct ReconstructionResult {
  Dims dims;
  ComplexMatrix estimate;
  double gram_rcond = 0.0;          // reciprocal condition estimate
  double hermiticity_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
  bool valid = false;               // all three within the noise bound

  /// The estimate as a DensityOperator; throws ValidationError if invalid.
  DensityOperator state() const;
};

inline constexpr double kDefaultNoiseBound = 1e-8;

/// Linear inversion: solves sum_q' chi_q' tr(P_q P_q') = p_q for chi and
/// assembles sum_q chi_q P_q. The estimate is never projected onto valid
/// states; violations beyond `noise_bound` leave `valid` false.
ReconstructionResult reconstruct(const std::vector<double>& probabilities,
                                 const std::vector<EventString>& probes,
                                 const Dims& dims,
                                 double noise_bound = kDefaultNoiseBound);

ReconstructionResult reconstruct(const std::vector<double>& probabilities,
                                 const ProbeBasis& basis,
                                 double noise_bound = kDefaultNoiseBound);

/// The three equivalent characterizations of a linearly independent family
/// of Q operators, each computed on its own route.
struct LinearIndependence {
  /// Only the trivial combination vanishes (full column rank of the
  /// vectorized family, by SVD).
  bool null_combination_only = false;
  /// Expansion matrix over an orthonormal Hermitian operator basis has full
  /// rank (nonzero determinant when Q = dim^2).
  bool expansion_nonsingular = false;
  /// Gram matrix tr(P_q P_q') is nonsingular.
  bool gram_nonsingular = false;

  double smallest_singular_value = 0.0;
  cplx expansion_determinant;
  cplx gram_determinant;
};

inline constexpr double kGramDeterminantTol = 1e-12;

LinearIndependence linear_independence_criteria(const std::vector<ComplexMatrix>& ops);

/// Gram-matrix criterion alone: (|det| > 1e-12, det).
std::pair<bool, cplx> gram_linear_independence_check(
    const std::vector<ComplexMatrix>& ops);

/// Trace-orthonormal Hermitian basis of operator space on C^dim.
std::vector<ComplexMatrix> hermitian_operator_basis(std::size_t dim);

}  // namespace clusterq
