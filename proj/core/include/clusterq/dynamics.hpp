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

#include "clusterq/correlations.hpp"
#include "clusterq/state.hpp"
#include "clusterq/tensor.hpp"

namespace clusterq {

/// Pairwise orthogonal projectors resolving the identity, all on the same
/// space. Operators on a multi-subsystem cluster use ascending subsystem
/// order for their tensor factors.
class ProjectiveDecomposition {
 public:
  explicit ProjectiveDecomposition(std::vector<Projector> projectors);

  const std::vector<Projector>& projectors() const { return projectors_; }
  std::size_t dim() const { return projectors_.front().dim(); }
  std::size_t size() const { return projectors_.size(); }

 private:
  std::vector<Projector> projectors_;
};

struct DistantOutcome {
  std::size_t index = 0;  // position in the projective decomposition
  double weight = 0.0;    // tr(rho P_q)
  DensityOperator state;  // tr_measured(P_q rho P_q) / weight
};

/// Convex decomposition of the unmeasured cluster's state induced by a
/// measurement; outcomes of probability <= 1e-12 are omitted.
struct DistantDecomposition {
  IndexSet distant;
  std::vector<DistantOutcome> outcomes;

  /// sum_q w_q rho_q
  ComplexMatrix mixture() const;
};

/// rho -> sum_q P_q rho P_q, with P_q acting on `measured`.
DensityOperator luders_nonselective(const DensityOperator& rho,
                                    const IndexSet& measured,
                                    const ProjectiveDecomposition& pd);

DistantDecomposition distant_decomposition(const DensityOperator& rho,
                                           const IndexSet& measured,
                                           const ProjectiveDecomposition& pd);

/// rho -> P rho P / tr(rho P). Throws ValidationError for a
/// zero-probability event.
DensityOperator luders_selective(const DensityOperator& rho,
                                 const IndexSet& measured, const Projector& event);

struct ConditionalIdentity {
  double lhs = 0.0;  // tr(rho P1 P2)
  double rhs = 0.0;  // tr(rho P1) * tr(rho_distant{rho, P1} P2)
  double gap = 0.0;
};

ConditionalIdentity conditional_probability_identity(const DensityOperator& rho,
                                                     const IndexSet& measured,
                                                     const Projector& measured_event,
                                                     const IndexSet& distant,
                                                     const Projector& distant_event);

/// Evolves rho by (U_int (x) U_dist) for `steps` steps and returns the
/// largest Frobenius deviation of the distant reduced state from
/// U_dist^t rho_dist U_dist^t^+.
double local_unitary_no_signaling(const DensityOperator& rho,
                                  const IndexSet& interacting,
                                  const IndexSet& distant,
                                  const ComplexMatrix& u_interacting,
                                  const ComplexMatrix& u_distant,
                                  std::size_t steps);

}  // namespace clusterq
