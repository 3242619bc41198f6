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

#include <cstdint>
#include <limits>
#include <vector>

#include "clusterq/correlations.hpp"
#include "clusterq/partition.hpp"
#include "clusterq/random.hpp"
#include "clusterq/state.hpp"

namespace clusterq {

/// 1e-9 times the total Hilbert-space dimension.
double default_tolerance(const DensityOperator& rho);

struct UcdCheck {
  bool is_ucd = false;
  double residual = 0.0;  // || rho - (x)_k rho_k ||_F
};

/// Does rho equal the tensor product of its cluster reduced states?
UcdCheck is_ucd(const DensityOperator& rho, const ClusterDecomposition& cd,
                double tol);
UcdCheck is_ucd(const DensityOperator& rho, const ClusterDecomposition& cd);

/// One evaluated split of `cluster` into `part` and the rest.
struct SplitRecord {
  IndexSet cluster;  // global indices, ascending
  IndexSet part;     // global indices, ascending
  double residual = 0.0;
};

struct FactorizationResult {
  ClusterDecomposition decomposition;
  std::vector<SplitRecord> splits;          // accepted splits, residual <= tolerance
  std::vector<SplitRecord> near_threshold;  // residual within a decade of tolerance
  double tolerance = 0.0;
  double reassembly_residual = 0.0;         // || rho - (x)_k rho_k || over the result

  bool ambiguous() const { return !near_threshold.empty(); }
};

inline constexpr std::size_t kMaxFactorizedSubsystems = 16;
inline constexpr std::size_t kMaxOracleSubsystems = 8;

/// The finest uncorrelated cluster decomposition, by recursive bipartition
/// splitting. Candidate splits of a cluster are tried by increasing size of
/// the smaller side, lexicographically within a size; the first one that
/// factorizes the cluster's reduced state is taken and both halves are
/// split further. A cluster with no factorizing split is final.
FactorizationResult finest_ucd(const DensityOperator& rho, double tol);
FactorizationResult finest_ucd(const DensityOperator& rho);

/// Exhaustive reference: the intersection of every uncorrelated partition.
ClusterDecomposition fucd_oracle(const DensityOperator& rho, double tol);

enum class Homogeneity { kHomogeneous, kHeterogeneous };

/// Homogeneous iff `cluster` is exactly one cluster of finest_ucd(rho).
Homogeneity classify_homogeneity(const DensityOperator& rho,
                                 const IndexSet& cluster, double tol);

/// True iff the extended state factorizes as rho_system (x) rho_rest.
bool is_correlationally_isolated(const DensityOperator& extended,
                                 const IndexSet& system, double tol);

struct SeevinckCheck {
  double lhs = 0.0;  // tr(W0 P_1 ... P_N)
  double rhs = 0.0;  // tr(W_I prod_{i in I} P_i) tr(W_II prod_{i in II} P_i)
  bool holds = false;

  double gap() const { return std::abs(lhs - rhs); }
};

inline constexpr double kSeevinckTol = 1e-10;

/// `groups` must have exactly two clusters; `events[i]` acts on subsystem i.
SeevinckCheck seevinck_condition(const DensityOperator& rho,
                                 const ClusterDecomposition& groups,
                                 const std::vector<Projector>& events,
                                 double tol = kSeevinckTol);

struct SeevinckSearch {
  SeevinckCheck best;               // largest |lhs - rhs| seen
  std::vector<Projector> witness;   // the events that produced it
  std::size_t samples = 0;

  bool violated() const { return !best.holds; }
};

inline constexpr std::size_t kDefaultSearchBudget = 1000;

/// Samples random single-subsystem ray projectors and keeps the worst gap.
SeevinckSearch seevinck_search(const DensityOperator& rho,
                               const ClusterDecomposition& groups,
                               std::size_t budget = kDefaultSearchBudget,
                               std::uint64_t seed = kDefaultSeed,
                               double tol = kSeevinckTol);

struct WitnessSearch {
  EventString best;
  CorrelationReport report;
  std::size_t samples = 0;
};

/// Random search over strings of cluster ray projectors for the largest
/// seen correlation. Stops early once the seen value exceeds `stop_above`.
WitnessSearch search_correlation_witness(
    const DensityOperator& rho, const ClusterDecomposition& cd,
    std::size_t budget, std::uint64_t seed = kDefaultSeed,
    double stop_above = std::numeric_limits<double>::infinity());

}  // namespace clusterq
