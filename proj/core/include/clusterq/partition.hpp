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

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "clusterq/tensor.hpp"

namespace clusterq {

/// A partition of the subsystem indices {0, ..., N-1} into disjoint nonempty
/// clusters. Always held in canonical form: members ascending, clusters
/// ordered by their smallest member, so equality is structural.
class ClusterDecomposition {
 public:
  ClusterDecomposition(std::size_t num_subsystems,
                       std::vector<IndexSet> clusters);

  /// One cluster holding everything.
  static ClusterDecomposition trivial(std::size_t n);
  /// Every subsystem its own cluster.
  static ClusterDecomposition maximal(std::size_t n);

  /// Parses the text form `1,2|3,4` (1-based). Rejects duplicates, gaps
  /// and out-of-range members. When `num_subsystems` is zero the count is
  /// taken from the largest member.
  static ClusterDecomposition parse(std::string_view text,
                                    std::size_t num_subsystems = 0);

  std::size_t num_subsystems() const { return n_; }
  std::size_t size() const { return clusters_.size(); }
  const std::vector<IndexSet>& clusters() const { return clusters_; }
  const IndexSet& operator[](std::size_t k) const { return clusters_[k]; }

  bool is_trivial() const { return clusters_.size() == 1; }

  /// Index of the cluster containing subsystem `i`.
  std::size_t cluster_of(std::size_t i) const;

  /// Text form, 1-based: `1,2|3,4`.
  std::string to_string() const;

  friend bool operator==(const ClusterDecomposition&,
                         const ClusterDecomposition&) = default;

 private:
  std::size_t n_;
  std::vector<IndexSet> clusters_;
};

/// Parses a 1-based comma-separated index list such as `2,3` into 0-based
/// indices, keeping the given order.
IndexSet parse_index_list(std::string_view text);
std::string format_index_list(const IndexSet& set);

/// Merges clusters of `fine` according to `grouping`, a partition of the
/// cluster positions {0, ..., fine.size()-1}.
ClusterDecomposition coarsen(const ClusterDecomposition& fine,
                             const ClusterDecomposition& grouping);

/// True iff `coarse` is a coarsening of `fine`: every cluster of `coarse` is
/// a union of clusters of `fine`.
bool is_coarsening(const ClusterDecomposition& fine,
                   const ClusterDecomposition& coarse);

/// Coarsest common refinement: all nonempty pairwise cluster intersections.
ClusterDecomposition intersect(const ClusterDecomposition& a,
                               const ClusterDecomposition& b);

/// Decomposition of `subset` induced by `cd`: two members share a
/// subcluster iff they share a cluster in `cd`. The result is expressed over
/// positions within the sorted subset.
ClusterDecomposition induced(const ClusterDecomposition& cd,
                             const IndexSet& subset);

inline constexpr std::size_t kMaxEnumeratedSubsystems = 12;

/// Visits every partition of {0, ..., n-1} exactly once (restricted growth
/// strings, lexicographic). Returning false from the visitor stops early.
void for_each_partition(
    std::size_t n,
    const std::function<bool(const ClusterDecomposition&)>& visit);

std::vector<ClusterDecomposition> enumerate_partitions(std::size_t n);

}  // namespace clusterq
