// Copyright 2026 The skewrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewrank/oracle.hpp"

#include <gtest/gtest.h>

#include "skewrank/formulas.hpp"
#include "skewrank/powers.hpp"

namespace skewrank {
namespace {

TEST(OracleTest, RankZero) {
  const OracleResult r = oracle_search(edgeless(4), 0, 10);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(*r.witness, SkewMatrixQ(4));
  EXPECT_TRUE(r.exact);
  const OracleResult miss = oracle_search(path(2), 0, 10);
  EXPECT_FALSE(miss.found());
  EXPECT_TRUE(miss.exact);
}

TEST(OracleTest, RankTwoIsDecidedExactly) {
  const OracleResult miss = oracle_search(power(path(5), 2), 2, 200);
  EXPECT_FALSE(miss.found());
  EXPECT_TRUE(miss.exact);
  EXPECT_EQ(miss.restarts_tried, 0);

  const OracleResult hit = oracle_search(power(path(6), 4), 2, 0);
  ASSERT_TRUE(hit.found());
  EXPECT_EQ(hit.method, OracleMethod::kMultipartite);
  EXPECT_EQ(pattern_of(*hit.witness), power(path(6), 4));
  EXPECT_EQ(rank_exact(*hit.witness), 2);
}

TEST(OracleTest, RankTwoWithIsolatedVertices) {
  const int k22[] = {2, 2};
  const Graph g = disjoint_union(edgeless(2), complete_multipartite(k22));
  const OracleResult hit = oracle_search(g, 2, 0);
  ASSERT_TRUE(hit.found());
  EXPECT_EQ(pattern_of(*hit.witness), g);
}

TEST(OracleTest, TwoNontrivialComponentsNeedRankFour) {
  const Graph g = disjoint_union(complete(2), complete(3));
  const OracleResult two = oracle_search(g, 2, 50);
  EXPECT_FALSE(two.found());
  EXPECT_TRUE(two.exact);
  const OracleResult four = oracle_search(g, 4, 50);
  ASSERT_TRUE(four.found());
  EXPECT_EQ(four.method, OracleMethod::kSearch);
  EXPECT_EQ(pattern_of(*four.witness), g);
  EXPECT_EQ(rank_exact(*four.witness), 4);
}

TEST(OracleTest, FindsSquaredPathSixAtRankFour) {
  const Graph g = power(path(6), 2);
  const OracleResult hit = oracle_search(g, 4, 200, 42);
  ASSERT_TRUE(hit.found());
  EXPECT_EQ(pattern_of(*hit.witness), g);
  EXPECT_EQ(rank_exact(*hit.witness), mrs_path_power(6, 2).value);
}

TEST(OracleTest, LowerTargetsAlsoSucceedAtHigherRungs) {
  // Edgeless and rank-two graphs are realized at any larger even target.
  EXPECT_TRUE(oracle_search(edgeless(5), 4, 0).found());
  EXPECT_TRUE(oracle_search(complete(5), 4, 0).found());
}

TEST(OracleTest, MissAboveRankTwoIsEvidenceOnly) {
  // P_6 has minimum skew rank 6.
  const OracleResult miss = oracle_search(path(6), 4, 20);
  EXPECT_FALSE(miss.found());
  EXPECT_FALSE(miss.exact);
  EXPECT_EQ(miss.restarts_tried, 20);
}

TEST(OracleTest, RejectsBadTargets) {
  EXPECT_THROW(oracle_search(path(4), 3, 1), std::invalid_argument);
  EXPECT_THROW(oracle_search(path(4), 6, 1), std::invalid_argument);
  EXPECT_THROW(oracle_search(path(4), -2, 1), std::invalid_argument);
  EXPECT_THROW(oracle_search(path(4), 4, -1), std::invalid_argument);
}

TEST(OracleTest, SameSeedSameWitness) {
  const Graph g = strict_power(path(7), 2);
  const OracleResult a = oracle_search(g, 6, 200, 7);
  const OracleResult b = oracle_search(g, 6, 200, 7);
  ASSERT_TRUE(a.found());
  ASSERT_TRUE(b.found());
  EXPECT_EQ(a.restart, b.restart);
  EXPECT_EQ(*a.witness, *b.witness);
}

TEST(OracleTest, LadderMatchesClosedFormsOnSmallPowers) {
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r <= n; ++r)
      for (bool strict : {false, true}) {
        const PowerSpec spec{n, r, strict};
        EXPECT_EQ(oracle_ladder_value(path_power(spec), 200), mrs(spec).value)
            << n << "," << r << "," << strict;
      }
}

}  // namespace
}  // namespace skewrank
