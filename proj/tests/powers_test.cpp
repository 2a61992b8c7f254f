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

#include "skewrank/powers.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace skewrank {
namespace {

// Test oracle: vertices reachable from `start` by walks of each exact length,
// found by stepping a frontier set. Independent of the matrix powering.
std::vector<std::set<int>> walk_layers(const Graph& g, int start, int max_len) {
  std::vector<std::set<int>> layers{{start}};
  for (int len = 1; len <= max_len; ++len) {
    std::set<int> next;
    for (int v : layers.back())
      for (int w : g.neighbors(v)) next.insert(w);
    layers.push_back(std::move(next));
  }
  return layers;
}

Graph power_by_walks(const Graph& g, int r, bool strict) {
  std::vector<std::vector<std::set<int>>> from;
  for (int v = 1; v <= g.order(); ++v) from.push_back(walk_layers(g, v, r));
  return Graph::from_predicate(g.order(), [&](int i, int j) {
    const auto& layers = from[static_cast<std::size_t>(i - 1)];
    if (strict) return layers[static_cast<std::size_t>(r)].count(j) > 0;
    for (int len = 1; len <= r; ++len)
      if (layers[static_cast<std::size_t>(len)].count(j)) return true;
    return false;
  });
}

TEST(PowersTest, PowerExamples) {
  EXPECT_EQ(power(path(5), 1), path(5));
  EXPECT_EQ(power(path(5), 3), Graph::from_predicate(5, [](int i, int j) { return !(i == 1 && j == 5); }));
  EXPECT_EQ(power(path(5), 4), complete(5));
  EXPECT_THROW(power(path(3), 0), std::invalid_argument);
}

TEST(PowersTest, StrictPowerExamples) {
  const Edge outer[] = {{1, 3}};
  EXPECT_EQ(strict_power(path(3), 2), Graph(3, outer));
  EXPECT_EQ(strict_power(path(2), 2), edgeless(2));
  const int k23[] = {2, 3};
  EXPECT_TRUE(find_isomorphism(strict_power(path(5), 3), complete_multipartite(k23)));
  EXPECT_EQ(strict_power(path(1), 4), edgeless(1));
}

TEST(PowersTest, WalkComputationMatchesWalkOracleOnRandomGraphs) {
  std::mt19937 rng(3);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 9;
    const Graph g = Graph::from_predicate(n, [&](int, int) { return coin(rng); });
    for (int r = 1; r <= 6; ++r) {
      EXPECT_EQ(power(g, r), power_by_walks(g, r, false));
      EXPECT_EQ(strict_power(g, r), power_by_walks(g, r, true));
    }
  }
}

TEST(PowersTest, PathPowerEdgeExamples) {
  EXPECT_TRUE(path_power_edge({9, 4, true}, 1, 5));
  EXPECT_FALSE(path_power_edge({9, 4, true}, 1, 4));
  EXPECT_TRUE(path_power_edge({9, 3, true}, 1, 2));
  // Walk 1-2-1-2 of length 3.
  EXPECT_TRUE(walk_layers(path(9), 1, 3)[3].count(2));
  EXPECT_FALSE(path_power_edge({9, 4, false}, 3, 3));
  EXPECT_THROW(path_power_edge({9, 4, false}, 0, 3), std::out_of_range);
  EXPECT_THROW(path_power_edge({9, 4, false}, 1, 10), std::out_of_range);
  EXPECT_FALSE(path_power_edge({1, 2, true}, 1, 1));
}

TEST(PowersTest, ClosedFormMatchesWalkClosure) {
  for (int n = 1; n <= 20; ++n)
    for (int r = 1; r <= n; ++r)
      for (bool strict : {false, true}) {
        const PowerSpec spec{n, r, strict};
        const Graph rule =
            Graph::from_predicate(n, [&](int i, int j) { return path_power_edge(spec, i, j); });
        EXPECT_EQ(rule, path_power(spec)) << "n=" << n << " r=" << r << " strict=" << strict;
      }
}

TEST(PowersTest, PowersAreMonotone) {
  for (int n = 1; n <= 15; ++n)
    for (int r = 1; r <= n; ++r) {
      const Graph lo = power(path(n), r), hi = power(path(n), r + 1);
      EXPECT_EQ(graph_union(lo, hi), hi);
    }
}

TEST(PowersTest, NearCompletePowers) {
  for (int n = 2; n <= 15; ++n) {
    for (int r = n - 1; r <= n + 2; ++r) EXPECT_EQ(power(path(n), r), complete(n));
    if (n >= 3) {
      const Graph g = power(path(n), n - 2);
      EXPECT_EQ(g.edge_count(), complete(n).edge_count() - 1);
      EXPECT_FALSE(g.adjacent(1, n));
    }
  }
}

TEST(PowersTest, TerminalStrictShapes) {
  for (int n = 2; n <= 14; ++n)
    for (int r = std::max(1, n - 2); r <= n + 2; ++r) {
      const int lo = n / 2, hi = n - n / 2;
      const int parts[] = {lo, hi};
      const Graph expected = r % 2 != 0 ? complete_multipartite(parts)
                                        : disjoint_union(complete(lo), complete(hi));
      EXPECT_TRUE(find_isomorphism(strict_power(path(n), r), expected)) << n << "," << r;
    }
}

TEST(PowersTest, ConsecutiveWindowsArePathPowers) {
  for (int n = 1; n <= 10; ++n)
    for (int r = 1; r <= n; ++r)
      for (bool strict : {false, true}) {
        const Graph whole = path_power({n, r, strict});
        for (int m = 1; m <= n; ++m)
          for (int i = 1; i + m - 1 <= n; ++i) {
            std::vector<int> window;
            for (int k = 0; k < m; ++k) window.push_back(i + k);
            EXPECT_TRUE(find_isomorphism(induced_subgraph(whole, window), path_power({m, r, strict})));
          }
      }
}

TEST(PowersTest, PowerSpecDerivedSymbols) {
  EXPECT_EQ(PowerSpec({8, 4, true}).half_power(), 2);
  EXPECT_EQ(PowerSpec({8, 4, true}).half_order(), 4);
  EXPECT_FALSE(PowerSpec({9, 3, true}).half_power());
  EXPECT_FALSE(PowerSpec({9, 3, true}).half_order());
  EXPECT_THROW(PowerSpec({0, 1, false}).validate(), std::invalid_argument);
  EXPECT_THROW(PowerSpec({3, 0, false}).validate(), std::invalid_argument);
}

TEST(PowersTest, StrictSplitNineSquared) {
  const StrictSplit split = split_strict_even(9, 2);
  EXPECT_EQ(split.even_block, power(path(4), 2));
  EXPECT_EQ(split.odd_block, power(path(5), 2));
  // v_2 is vertex 2 of the even block; u_4 is vertex 4 of the odd block.
  EXPECT_EQ(split.phi(4), 2);
  EXPECT_EQ(split.phi(7), 4 + 4);
  EXPECT_TRUE(is_isomorphism(strict_power(path(9), 4),
                             disjoint_union(split.even_block, split.odd_block), split.phi));
}

TEST(PowersTest, StrictSplitSmallAndEvenCases) {
  const StrictSplit four = split_strict_even(4, 1);
  EXPECT_EQ(four.even_block, path(2));
  EXPECT_EQ(four.odd_block, path(2));
  const StrictSplit eight = split_strict_even(8, 2);
  EXPECT_EQ(eight.even_block, power(path(4), 2));
  EXPECT_EQ(eight.odd_block, power(path(4), 2));
  EXPECT_THROW(split_strict_even(2, 1), std::invalid_argument);
  EXPECT_THROW(split_strict_even(5, 0), std::invalid_argument);
}

}  // namespace
}  // namespace skewrank
