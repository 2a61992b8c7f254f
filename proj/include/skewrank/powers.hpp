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

#ifndef SKEWRANK_POWERS_HPP
#define SKEWRANK_POWERS_HPP

#include <optional>

#include "skewrank/graph.hpp"

namespace skewrank {

/// A path power P_n^r, or the strict power P_n^(r) when `strict` is set.
struct PowerSpec {
  int n = 1;
  int r = 1;
  bool strict = false;

  /// Throws std::invalid_argument unless n >= 1 and r >= 1.
  void validate() const;
  /// r / 2 when r is even.
  std::optional<int> half_power() const;
  /// n / 2 when n is even.
  std::optional<int> half_order() const;

  friend bool operator==(const PowerSpec&, const PowerSpec&) = default;
};

/// Edge iff some walk of length at most r joins the endpoints.
Graph power(const Graph& g, int r);
/// Edge iff some walk of length exactly r joins the endpoints. Closed walks
/// are discarded, so the result stays loop-free.
Graph strict_power(const Graph& g, int r);

/// Path power built directly from the walk definitions above.
Graph path_power(const PowerSpec& spec);

/// Closed-form adjacency of P_n^r (|i-j| <= r) or P_n^(r) (additionally
/// |i-j| = r mod 2, and never for n = 1).
bool path_power_edge(const PowerSpec& spec, int i, int j);

/// Even strict power P_n^(2m) split into P_{floor(n/2)}^m and
/// P_{ceil(n/2)}^m.
///
/// `phi` maps vertex 2t to t (the first block) and vertex 2s-1 to
/// floor(n/2) + s (the second block) inside `disjoint_union(even_block,
/// odd_block)`.
struct StrictSplit {
  IsoMapping phi;
  Graph even_block;
  Graph odd_block;
};

/// Requires n >= 3 and m >= 1. The mapping is checked against
/// strict_power(path(n), 2m) before returning; a failed check throws
/// std::logic_error.
StrictSplit split_strict_even(int n, int m);

}  // namespace skewrank

#endif  // SKEWRANK_POWERS_HPP
