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

#include <string_view>
#include <vector>

#include "clusterq/correlations.hpp"
#include "clusterq/state.hpp"
#include "clusterq/tensor.hpp"

namespace clusterq {

/// Two complementary groups of subsystems. Unlike ClusterDecomposition the
/// order is significant: `left` is the first tensor factor, and members of
/// each side keep the order given.
struct Bipartition {
  IndexSet left;
  IndexSet right;

  /// Parses `2,3|1,4` (1-based). Both sides must be nonempty and together
  /// cover 1..num_subsystems exactly once.
  static Bipartition parse(std::string_view text, std::size_t num_subsystems);

  void validate(std::size_t num_subsystems) const;
};

struct SchmidtForm {
  RealVector coefficients;            // descending, strictly positive
  std::vector<ComplexVector> left;    // orthonormal, first factor
  std::vector<ComplexVector> right;   // orthonormal partners
  Dims left_dims;
  Dims right_dims;

  /// sum_i c_i |l_i> (x) |r_i>, in left-then-right factor order.
  ComplexVector reconstruct() const;
};

/// Antilinear map v -> matrix * conj(v), from the support of the left
/// reduced state onto the support of the right one.
struct CorrelationOperator {
  ComplexMatrix matrix;           // right_dim x left_dim
  ComplexMatrix left_support;     // projector onto the domain

  ComplexVector apply(const ComplexVector& v) const;
};

struct Partner {
  ComplexVector vector;  // normalized; zero when coefficient is zero
  double coefficient = 0.0;
};

/// The state's amplitudes reordered to `left` then `right` and reshaped to
/// a left_dim x right_dim coefficient matrix.
ComplexMatrix coefficient_matrix(const StateVector& psi, const Bipartition& bip);

/// Each left Schmidt vector has its first nonzero component real positive;
/// partner phases follow from the expansion.
SchmidtForm schmidt_decompose(const StateVector& psi, const Bipartition& bip);

CorrelationOperator correlation_operator(const StateVector& psi,
                                         const Bipartition& bip);

/// Expands psi as sum_i c_i |b_i> (x) |p_i> in a given orthonormal family
/// on the left factor. The family must diagonalize the left reduced state
/// and span its support; otherwise ValidationError.
std::vector<Partner> partners_in_basis(const StateVector& psi,
                                       const Bipartition& bip,
                                       const std::vector<ComplexVector>& basis);

/// Correlation seen by the string (left event, right event), evaluated
/// through the correlation operator and the square root of the left reduced
/// state rather than through the joint density operator.
double seen_correlation_via_operator(const StateVector& psi, const Bipartition& bip,
                               const Projector& left_event,
                               const Projector& right_event);

}  // namespace clusterq
