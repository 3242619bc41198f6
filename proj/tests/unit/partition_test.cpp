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

#include <set>

#include <gtest/gtest.h>

#include "clusterq/error.hpp"
#include "test_util.hpp"

namespace clusterq {
namespace {

ClusterDecomposition cd(std::string_view text, std::size_t n = 0) {
  return ClusterDecomposition::parse(text, n);
}

TEST(ClusterDecomposition, ParseRoundTripAndCanonicalOrder) {
  EXPECT_EQ(cd("1,2|3,4").to_string(), "1,2|3,4");
  EXPECT_EQ(cd("3,4|2,1").to_string(), "1,2|3,4");
  EXPECT_EQ(cd("2,3|1,4").to_string(), "1,4|2,3");
  EXPECT_EQ(cd(" 1 , 2 | 3 ").num_subsystems(), 3u);
  EXPECT_EQ(cd("1,2,3,4").size(), 1u);
  EXPECT_TRUE(cd("1,2,3,4").is_trivial());
  EXPECT_EQ(cd("1,4|2,3").cluster_of(3), 0u);
  EXPECT_EQ(cd("1,4|2,3").cluster_of(1), 1u);
}

TEST(ClusterDecomposition, ParseRejectsMalformed) {
  EXPECT_THROW(cd("1,2|2,3"), ValidationError);
  EXPECT_THROW(cd("1,3"), ValidationError);
  EXPECT_THROW(cd("0,1"), ValidationError);
  EXPECT_THROW(cd("1,2|"), ValidationError);
  EXPECT_THROW(cd("1,x"), ValidationError);
  EXPECT_THROW(cd("1,2|3", 4), ValidationError);
  EXPECT_THROW(cd("1,2|3,5", 4), ValidationError);
  EXPECT_THROW(cd(""), ValidationError);
}

TEST(ClusterDecomposition, TrivialAndMaximal) {
  EXPECT_EQ(ClusterDecomposition::trivial(3).to_string(), "1,2,3");
  EXPECT_EQ(ClusterDecomposition::maximal(3).to_string(), "1|2|3");
  EXPECT_THROW(ClusterDecomposition::trivial(0), ValidationError);
}

TEST(Lattice, CoarsenExamples) {
  EXPECT_EQ(coarsen(cd("1|2|3|4"), cd("1,2|3,4")), cd("1,2|3,4"));
  EXPECT_EQ(coarsen(cd("1,2|3|4"), cd("1|2,3")), cd("1,2|3,4"));
  EXPECT_THROW(coarsen(cd("1,2|3|4"), cd("1,2")), ValidationError);
}

TEST(Lattice, IsCoarseningExamples) {
  EXPECT_TRUE(is_coarsening(cd("1,2|3,4"), cd("1,2,3,4")));
  EXPECT_TRUE(is_coarsening(cd("1|2|3|4"), cd("1,2|3,4")));
  EXPECT_TRUE(is_coarsening(cd("1,2|3,4"), cd("1,2|3,4")));
  EXPECT_FALSE(is_coarsening(cd("1,2|3,4"), cd("1,3|2,4")));
  EXPECT_FALSE(is_coarsening(cd("1,2,3,4"), cd("1,2|3,4")));
}

TEST(Lattice, IntersectExamples) {
  EXPECT_EQ(intersect(cd("1,2|3,4"), cd("1,3|2,4")), cd("1|2|3|4"));
  EXPECT_EQ(intersect(cd("1,2,3|4"), cd("1,2|3,4")), cd("1,2|3|4"));
  EXPECT_EQ(intersect(cd("1,2,3,4"), cd("1,4|2,3")), cd("1,4|2,3"));
}

TEST(Lattice, IntersectionIsGreatestLowerBound) {
  const auto all = enumerate_partitions(4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto m = intersect(a, b);
      EXPECT_TRUE(is_coarsening(m, a));
      EXPECT_TRUE(is_coarsening(m, b));
      EXPECT_EQ(intersect(b, a), m);
      for (const auto& c : all) {
        if (is_coarsening(c, a) && is_coarsening(c, b)) {
          EXPECT_TRUE(is_coarsening(c, m));
        }
      }
    }
  }
}

TEST(Lattice, InducedOnSubset) {
  EXPECT_EQ(induced(cd("1,4|2,3"), {1, 3}), cd("1|2"));
  EXPECT_EQ(induced(cd("1,2|3,4"), {0, 1, 2}), cd("1,2|3"));
}

TEST(Enumeration, CountsMatchBellNumbers) {
  const std::vector<std::size_t> bell{1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (std::size_t n = 1; n <= bell.size(); ++n) {
    std::size_t count = 0;
    for_each_partition(n, [&](const ClusterDecomposition&) {
      ++count;
      return true;
    });
    EXPECT_EQ(count, bell[n - 1]) << "n=" << n;
  }
}

TEST(Enumeration, PartitionsAreDistinctAndValid) {
  const auto all = enumerate_partitions(5);
  std::set<std::string> seen;
  for (const auto& p : all) {
    EXPECT_TRUE(seen.insert(p.to_string()).second);
    EXPECT_EQ(p.num_subsystems(), 5u);
    EXPECT_EQ(ClusterDecomposition::parse(p.to_string(), 5), p);
  }
  EXPECT_EQ(seen.size(), 52u);
}

TEST(Enumeration, VisitorCanStopEarly) {
  std::size_t count = 0;
  for_each_partition(6, [&](const ClusterDecomposition&) { return ++count < 7; });
  EXPECT_EQ(count, 7u);
}

TEST(Enumeration, RejectsLargeN) {
  EXPECT_THROW(enumerate_partitions(kMaxEnumeratedSubsystems + 1), ValidationError);
}

TEST(IndexList, ParseAndFormat) {
  EXPECT_EQ(parse_index_list("2,3"), (IndexSet{1, 2}));
  EXPECT_EQ(format_index_list({1, 2}), "2,3");
  EXPECT_THROW(parse_index_list("2,,3"), ValidationError);
}

}  // namespace
}  // namespace clusterq
