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

#ifndef SKEWRANK_WITNESS_HPP
#define SKEWRANK_WITNESS_HPP

#include <span>
#include <vector>

#include "skewrank/graph.hpp"
#include "skewrank/skew_matrix.hpp"

namespace skewrank {

/// Rank-2 realization of a complete multipartite graph: a_ij = x_i - x_j
/// where x takes the value p on every vertex of class p (1-based). Needs at
/// least two classes.
SkewMatrixQ witness_multipartite(std::span<const int> part_sizes);
/// Same construction for an explicit partition of 1..order.
SkewMatrixQ witness_multipartite(int order, const std::vector<std::vector<int>>& classes);

/// Tridiagonal matrix with unit superdiagonal; realizes P_n.
SkewMatrixQ witness_path(int n);

/// Smallest positive integer scale for which A + scale * B has support
/// exactly `target`. The supports of A and B must cover `target`.
int overlay_scale(const SkewMatrixQ& a, const SkewMatrixQ& b, const Graph& target);
SkewMatrixQ overlay(const SkewMatrixQ& a, const SkewMatrixQ& b, const Graph& target);

/// Realization of P_n^r with rank equal to its minimum skew rank. Built by
/// covering the graph with the window 1..r+2 and the recursive realization
/// on 3..n until the power is (almost) complete.
SkewMatrixQ witness_path_power(int n, int r);

/// Realization of P_n^(r). Odd r covers with the recursive realization on
/// 1..n-2 and the bipartite window n-r-1..n; even r pulls the two half-path
/// power realizations back along the parity split.
SkewMatrixQ witness_path_strict(int n, int r);

}  // namespace skewrank

#endif  // SKEWRANK_WITNESS_HPP
