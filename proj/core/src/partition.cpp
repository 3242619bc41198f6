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

#include "clusterq/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "clusterq/error.hpp"

namespace clusterq {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

ClusterDecomposition::ClusterDecomposition(std::size_t num_subsystems,
                                           std::vector<IndexSet> clusters)
    : n_(num_subsystems), clusters_(std::move(clusters)) {
  if (n_ == 0) throw ValidationError("cluster decomposition: no subsystems");
  std::vector<bool> seen(n_, false);
  std::size_t count = 0;
  for (auto& c : clusters_) {
    if (c.empty()) throw ValidationError("cluster decomposition: empty cluster");
    for (std::size_t i : c) {
      if (i >= n_) {
        throw ValidationError("cluster decomposition: member " +
                              std::to_string(i + 1) + " out of range 1.." +
                              std::to_string(n_));
      }
      if (seen[i]) {
        throw ValidationError("cluster decomposition: subsystem " +
                              std::to_string(i + 1) +
                              " appears in more than one cluster");
      }
      seen[i] = true;
      ++count;
    }
    std::sort(c.begin(), c.end());
  }
  if (count != n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (!seen[i]) {
        throw ValidationError("cluster decomposition: subsystem " +
                              std::to_string(i + 1) + " is not covered");
      }
    }
  }
  std::sort(clusters_.begin(), clusters_.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
}

ClusterDecomposition ClusterDecomposition::trivial(std::size_t n) {
  IndexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return ClusterDecomposition(n, {all});
}

ClusterDecomposition ClusterDecomposition::maximal(std::size_t n) {
  std::vector<IndexSet> cs;
  for (std::size_t i = 0; i < n; ++i) cs.push_back({i});
  return ClusterDecomposition(n, std::move(cs));
}

IndexSet parse_index_list(std::string_view text) {
  IndexSet out;
  for (auto tok : split(text, ',')) {
    tok = trim(tok);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ValidationError("index list: cannot parse '" + std::string(tok) + "'");
    }
    if (value == 0) throw ValidationError("index list: indices are 1-based");
    out.push_back(value - 1);
  }
  return out;
}

std::string format_index_list(const IndexSet& set) {
  std::ostringstream os;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) os << ',';
    os << set[k] + 1;
  }
  return os.str();
}

ClusterDecomposition ClusterDecomposition::parse(std::string_view text,
                                                 std::size_t num_subsystems) {
  std::vector<IndexSet> clusters;
  std::size_t largest = 0;
  for (auto part : split(trim(text), '|')) {
    clusters.push_back(parse_index_list(part));
    for (std::size_t i : clusters.back()) largest = std::max(largest, i + 1);
  }
  const std::size_t n = num_subsystems ? num_subsystems : largest;
  return ClusterDecomposition(n, std::move(clusters));
}

std::size_t ClusterDecomposition::cluster_of(std::size_t i) const {
  for (std::size_t k = 0; k < clusters_.size(); ++k) {
    if (std::binary_search(clusters_[k].begin(), clusters_[k].end(), i)) return k;
  }
  throw ValidationError("cluster decomposition: subsystem out of range");
}

std::string ClusterDecomposition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < clusters_.size(); ++k) {
    if (k) out += '|';
    out += format_index_list(clusters_[k]);
  }
  return out;
}

ClusterDecomposition coarsen(const ClusterDecomposition& fine,
                             const ClusterDecomposition& grouping) {
  if (grouping.num_subsystems() != fine.size()) {
    throw ValidationError("coarsen: grouping must partition the " +
                          std::to_string(fine.size()) + " clusters");
  }
  std::vector<IndexSet> merged;
  for (const auto& group : grouping.clusters()) {
    IndexSet c;
    for (std::size_t k : group) c.insert(c.end(), fine[k].begin(), fine[k].end());
    merged.push_back(std::move(c));
  }
  return ClusterDecomposition(fine.num_subsystems(), std::move(merged));
}

bool is_coarsening(const ClusterDecomposition& fine,
                   const ClusterDecomposition& coarse) {
  if (fine.num_subsystems() != coarse.num_subsystems()) {
    throw ValidationError("is_coarsening: decompositions of different systems");
  }
  // Every fine cluster must sit inside a single coarse cluster.
  for (const auto& c : fine.clusters()) {
    const std::size_t home = coarse.cluster_of(c.front());
    for (std::size_t i : c) {
      if (coarse.cluster_of(i) != home) return false;
    }
  }
  return true;
}

ClusterDecomposition intersect(const ClusterDecomposition& a,
                               const ClusterDecomposition& b) {
  if (a.num_subsystems() != b.num_subsystems()) {
    throw ValidationError("intersect: decompositions of different systems");
  }
  std::vector<IndexSet> out;
  for (const auto& ca : a.clusters()) {
    for (const auto& cb : b.clusters()) {
      IndexSet both;
      std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                            std::back_inserter(both));
      if (!both.empty()) out.push_back(std::move(both));
    }
  }
  return ClusterDecomposition(a.num_subsystems(), std::move(out));
}

ClusterDecomposition induced(const ClusterDecomposition& cd,
                             const IndexSet& subset) {
  IndexSet sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw ValidationError("induced: empty subset");
  std::vector<IndexSet> groups(cd.size());
  for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
    groups[cd.cluster_of(sorted[pos])].push_back(pos);
  }
  std::erase_if(groups, [](const IndexSet& g) { return g.empty(); });
  return ClusterDecomposition(sorted.size(), std::move(groups));
}

void for_each_partition(
    std::size_t n,
    const std::function<bool(const ClusterDecomposition&)>& visit) {
  if (n < 1 || n > kMaxEnumeratedSubsystems) {
    throw ValidationError("enumerate_partitions: n must be in 1.." +
                          std::to_string(kMaxEnumeratedSubsystems));
  }
  // Restricted growth string: block[0] = 0, block[i] <= 1 + max(block[<i]).
  std::vector<std::size_t> block(n, 0), prefix_max(n, 0);
  while (true) {
    std::vector<IndexSet> clusters(prefix_max[n - 1] + 1);
    for (std::size_t i = 0; i < n; ++i) clusters[block[i]].push_back(i);
    if (!visit(ClusterDecomposition(n, std::move(clusters)))) return;

    std::size_t i = n - 1;
    while (i > 0 && block[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++block[i];
    prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      block[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<ClusterDecomposition> enumerate_partitions(std::size_t n) {
  std::vector<ClusterDecomposition> out;
  for_each_partition(n, [&](const ClusterDecomposition& cd) {
    out.push_back(cd);
    return true;
  });
  return out;
}

}  // namespace clusterq
