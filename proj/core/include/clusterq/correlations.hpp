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

#include <optional>
#include <vector>

#include "clusterq/partition.hpp"
#include "clusterq/state.hpp"
#include "clusterq/tensor.hpp"

namespace clusterq {

/// Orthogonal projector: Hermitian and idempotent within kHermitianTol.
class Projector {
 public:
  explicit Projector(ComplexMatrix matrix);

  static Projector onto(const ComplexVector& v);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  std::size_t rank() const { return rank_; }

 private:
  ComplexMatrix matrix_;
  std::size_t rank_;
};

/// One event per cluster of a decomposition; std::nullopt is the certain
/// event (identity on that cluster).
struct EventString {
  std::vector<std::optional<Projector>> events;

  static EventString certain(std::size_t clusters);
};

struct CorrelationReport {
  double coincidence = 0.0;       // tr(rho P_1 ... P_n)
  double marginal_product = 0.0;  // prod_k tr(rho_k P_k)
  double seen = 0.0;              // |coincidence - marginal_product|
  double signed_difference = 0.0; // coincidence - marginal_product
};

/// Entropy-based correlation information, in bits.
struct CorrelationInformation {
  std::vector<double> within;  // I_{C_k} per cluster
  double among = 0.0;          // among-the-clusters information
  double total = 0.0;          // sum_i S_i - S_whole
};

/// The full-space operator P_1 (x) ... (x) P_n placed on the clusters of
/// `cd`, in global subsystem order.
ComplexMatrix event_operator(const Dims& dims, const ClusterDecomposition& cd,
                             const EventString& s);

double coincidence_probability(const DensityOperator& rho,
                               const ClusterDecomposition& cd,
                               const EventString& s);

CorrelationReport seen_correlation(const DensityOperator& rho,
                                   const ClusterDecomposition& cd,
                                   const EventString& s);

/// True when some cluster event has probability <= 1e-12 in its reduced
/// state. Such a string sees no correlation; that is checked as well and a
/// violation raises NumericalError.
bool check_zero_probability_blindness(const DensityOperator& rho,
                                      const ClusterDecomposition& cd,
                                      const EventString& s);

/// -sum lambda log2 lambda; eigenvalues below 1e-12 count as zero.
double von_neumann_entropy(const DensityOperator& rho);

CorrelationInformation correlation_information(const DensityOperator& rho,
                                               const ClusterDecomposition& cd);

}  // namespace clusterq
