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

#include <vector>

#include "clusterq/tensor.hpp"

namespace clusterq {

/// Trace-one positive operator on H_1 (x) ... (x) H_N with labeled subsystem
/// dimensions. Construction validates Hermiticity, unit trace and
/// positivity to kHermitianTol; a failure names the invariant and the
/// offending magnitude.
class DensityOperator {
 public:
  DensityOperator(Dims dims, ComplexMatrix matrix);

  const Dims& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t num_subsystems() const { return dims_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

  /// Eigenvalues, ascending, with values in [-tol, 0) clamped to zero.
  RealVector spectrum() const;

 private:
  Dims dims_;
  ComplexMatrix matrix_;
};

/// Unit vector in H_1 (x) ... (x) H_N.
class StateVector {
 public:
  StateVector(Dims dims, ComplexVector amplitudes);

  /// Normalizes a nonzero vector before validating.
  static StateVector normalized(Dims dims, const ComplexVector& amplitudes);

  const Dims& dims() const { return dims_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  std::size_t num_subsystems() const { return dims_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }

  DensityOperator density() const;

 private:
  Dims dims_;
  ComplexVector amplitudes_;
};

StateVector tensor_product(const StateVector& a, const StateVector& b);
DensityOperator tensor_product(const DensityOperator& a,
                               const DensityOperator& b);

/// Partial trace onto `cluster`; kept subsystems stay in global order.
DensityOperator reduced_state(const DensityOperator& rho,
                              const IndexSet& cluster);

/// Isomorphic reordering: subsystem perm[i] of the input becomes subsystem
/// i of the output.
DensityOperator permute_subsystems(const DensityOperator& rho,
                                   const std::vector<std::size_t>& perm);
StateVector permute_subsystems(const StateVector& psi,
                               const std::vector<std::size_t>& perm);

}  // namespace clusterq
