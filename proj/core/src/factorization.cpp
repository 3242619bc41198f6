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

#include "clusterq/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clusterq/error.hpp"

namespace clusterq {

namespace {

// Calls visit(positions) for every s-subset of {0..k-1}, lexicographically.
// Stops when visit returns true.
template <typename Visit>
bool for_each_subset(std::size_t k, std::size_t s, Visit&& visit) {
  std::vector<std::size_t> pos(s);
  for (std::size_t i = 0; i < s; ++i) pos[i] = i;
  while (true) {
    if (visit(pos)) return true;
    std::size_t i = s;
    while (i > 0 && pos[i - 1] == k - s + i - 1) --i;
    if (i == 0) return false;
    ++pos[i - 1];
    for (std::size_t j = i; j < s; ++j) pos[j] = pos[j - 1] + 1;
  }
}

IndexSet pick(const IndexSet& from, const std::vector<std::size_t>& positions) {
  IndexSet out;
  for (std::size_t p : positions) out.push_back(from[p]);
  return out;
}

IndexSet rest_of(const IndexSet& from, const std::vector<std::size_t>& positions) {
  IndexSet out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (next < positions.size() && positions[next] == i) {
      ++next;
    } else {
      out.push_back(from[i]);
    }
  }
  return out;
}

double event_probability(const ComplexMatrix& state, const ComplexMatrix& event) {
  return std::clamp(trace_of_product(state, event).real(), 0.0, 1.0);
}

}  // namespace

double default_tolerance(const DensityOperator& rho) {
  return 1e-9 * static_cast<double>(rho.dim());
}

UcdCheck is_ucd(const DensityOperator& rho, const ClusterDecomposition& cd,
                double tol) {
  if (cd.num_subsystems() != rho.num_subsystems()) {
    throw ValidationError("is_ucd: decomposition covers " +
                          std::to_string(cd.num_subsystems()) + " subsystems, state has " +
                          std::to_string(rho.num_subsystems()));
  }
  if (cd.is_trivial()) return {true, 0.0};
  std::vector<ComplexMatrix> factors;
  factors.reserve(cd.size());
  for (const auto& c : cd.clusters()) factors.push_back(reduced_state(rho, c).matrix());
  const ComplexMatrix product = kron_clusters(factors, cd.clusters(), rho.dims());
  const double residual = frobenius_distance(rho.matrix(), product);
  return {residual <= tol, residual};
}

UcdCheck is_ucd(const DensityOperator& rho, const ClusterDecomposition& cd) {
  return is_ucd(rho, cd, default_tolerance(rho));
}

FactorizationResult finest_ucd(const DensityOperator& rho, double tol) {
  const std::size_t n = rho.num_subsystems();
  if (n > kMaxFactorizedSubsystems) {
    throw ValidationError("finest_ucd: at most " + std::to_string(kMaxFactorizedSubsystems) +
                          " subsystems supported");
  }
  FactorizationResult result{ClusterDecomposition::trivial(n), {}, {}, tol, 0.0};

  std::vector<IndexSet> pending{ClusterDecomposition::trivial(n)[0]};
  std::vector<IndexSet> final_clusters;
  while (!pending.empty()) {
    IndexSet cluster = std::move(pending.back());
    pending.pop_back();
    const std::size_t k = cluster.size();
    if (k == 1) {
      final_clusters.push_back(std::move(cluster));
      continue;
    }
    const DensityOperator local = k == n ? rho : reduced_state(rho, cluster);

    std::optional<std::pair<IndexSet, IndexSet>> split;
    for (std::size_t s = 1; s <= k / 2 && !split; ++s) {
      for_each_subset(k, s, [&](const std::vector<std::size_t>& pos) {
        // Equal halves: keep only the side holding the first member.
        if (2 * s == k && pos.front() != 0) return false;
        std::vector<std::size_t> rest_pos;
        for (std::size_t i = 0, j = 0; i < k; ++i) {
          if (j < pos.size() && pos[j] == i) {
            ++j;
          } else {
            rest_pos.push_back(i);
          }
        }
        const ClusterDecomposition local_cd(k, {pos, rest_pos});
        const UcdCheck check = is_ucd(local, local_cd, tol);
        SplitRecord rec{cluster, pick(cluster, pos), check.residual};
        if (check.residual >= tol / 10.0 && check.residual <= tol * 10.0) {
          result.near_threshold.push_back(rec);
        }
        if (check.is_ucd) {
          result.splits.push_back(rec);
          split.emplace(pick(cluster, pos), rest_of(cluster, pos));
          return true;
        }
        return false;
      });
    }
    if (split) {
      pending.push_back(std::move(split->second));
      pending.push_back(std::move(split->first));
    } else {
      final_clusters.push_back(std::move(cluster));
    }
  }

  result.decomposition = ClusterDecomposition(n, std::move(final_clusters));
  result.reassembly_residual = is_ucd(rho, result.decomposition, tol).residual;
  return result;
}

FactorizationResult finest_ucd(const DensityOperator& rho) {
  return finest_ucd(rho, default_tolerance(rho));
}

ClusterDecomposition fucd_oracle(const DensityOperator& rho, double tol) {
  const std::size_t n = rho.num_subsystems();
  if (n > kMaxOracleSubsystems) {
    throw ValidationError("fucd_oracle: at most " + std::to_string(kMaxOracleSubsystems) +
                          " subsystems supported");
  }
  auto finest = ClusterDecomposition::trivial(n);
  for_each_partition(n, [&](const ClusterDecomposition& cd) {
    if (is_ucd(rho, cd, tol).is_ucd) finest = intersect(finest, cd);
    return true;
  });
  return finest;
}

Homogeneity classify_homogeneity(const DensityOperator& rho,
                                 const IndexSet& cluster, double tol) {
  IndexSet sorted = cluster;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      sorted.back() >= rho.num_subsystems()) {
    throw ValidationError("classify_homogeneity: cluster must be a nonempty set of distinct subsystems");
  }
  const auto fucd = finest_ucd(rho, tol).decomposition;
  const auto& cs = fucd.clusters();
  return std::find(cs.begin(), cs.end(), sorted) != cs.end()
             ? Homogeneity::kHomogeneous
             : Homogeneity::kHeterogeneous;
}

bool is_correlationally_isolated(const DensityOperator& extended,
                                 const IndexSet& system, double tol) {
  const std::size_t n = extended.num_subsystems();
  if (system.empty() || system.size() >= n) {
    throw ValidationError("is_correlationally_isolated: system must be a proper nonempty subset");
  }
  IndexSet env;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(system.begin(), system.end(), i) == system.end()) env.push_back(i);
  }
  return is_ucd(extended, ClusterDecomposition(n, {system, env}), tol).is_ucd;
}

SeevinckCheck seevinck_condition(const DensityOperator& rho,
                                 const ClusterDecomposition& groups,
                                 const std::vector<Projector>& events, double tol) {
  const std::size_t n = rho.num_subsystems();
  if (groups.num_subsystems() != n || groups.size() != 2) {
    throw ValidationError("seevinck_condition: groups must split the system into two clusters");
  }
  if (events.size() != n) {
    throw ValidationError("seevinck_condition: one event per subsystem required");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (events[i].dim() != rho.dims()[i]) {
      throw ValidationError("seevinck_condition: event " + std::to_string(i + 1) +
                            " does not match subsystem dimension");
    }
  }
  std::vector<ComplexMatrix> local;
  for (const auto& e : events) local.push_back(e.matrix());
  const auto singles = ClusterDecomposition::maximal(n);

  SeevinckCheck c;
  c.lhs = event_probability(rho.matrix(), kron_clusters(local, singles.clusters(), rho.dims()));
  c.rhs = 1.0;
  for (const auto& g : groups.clusters()) {
    std::vector<ComplexMatrix> part;
    for (std::size_t i : g) part.push_back(local[i]);
    c.rhs *= event_probability(reduced_state(rho, g).matrix(), kron_all(part));
  }
  c.holds = c.gap() <= tol;
  return c;
}

SeevinckSearch seevinck_search(const DensityOperator& rho,
                               const ClusterDecomposition& groups,
                               std::size_t budget, std::uint64_t seed, double tol) {
  Rng rng(seed);
  SeevinckSearch out;
  out.best.holds = true;
  for (std::size_t k = 0; k < budget; ++k) {
    std::vector<Projector> events;
    for (std::size_t d : rho.dims()) events.emplace_back(random_ray_projector(d, rng));
    const auto check = seevinck_condition(rho, groups, events, tol);
    ++out.samples;
    if (out.witness.empty() || check.gap() > out.best.gap()) {
      out.best = check;
      out.witness = std::move(events);
    }
  }
  return out;
}

WitnessSearch search_correlation_witness(const DensityOperator& rho,
                                         const ClusterDecomposition& cd,
                                         std::size_t budget, std::uint64_t seed,
                                         double stop_above) {
  Rng rng(seed);
  std::vector<ComplexMatrix> reduced;
  std::vector<std::size_t> cluster_dims;
  for (const auto& c : cd.clusters()) {
    reduced.push_back(reduced_state(rho, c).matrix());
    cluster_dims.push_back(static_cast<std::size_t>(reduced.back().rows()));
  }

  WitnessSearch out;
  out.best = EventString::certain(cd.size());
  for (std::size_t k = 0; k < budget; ++k) {
    std::vector<ComplexMatrix> events;
    double marginal = 1.0;
    for (std::size_t c = 0; c < cd.size(); ++c) {
      events.push_back(random_ray_projector(cluster_dims[c], rng));
      marginal *= event_probability(reduced[c], events.back());
    }
    const double joint = event_probability(
        rho.matrix(), kron_clusters(events, cd.clusters(), rho.dims()));
    ++out.samples;
    const double seen = std::abs(joint - marginal);
    if (k == 0 || seen > out.report.seen) {
      out.report = {joint, marginal, seen, joint - marginal};
      out.best.events.clear();
      for (auto& e : events) out.best.events.emplace_back(Projector(std::move(e)));
    }
    if (out.report.seen > stop_above) break;
  }
  return out;
}

}  // namespace clusterq
