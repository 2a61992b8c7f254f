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

#ifndef SKEWRANK_ORACLE_HPP
#define SKEWRANK_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "skewrank/graph.hpp"
#include "skewrank/skew_matrix.hpp"

namespace skewrank {

inline constexpr std::uint64_t kDefaultSeed = 1729;

enum class OracleMethod {
  kZero,          // edgeless graph, zero matrix
  kMultipartite,  // single nontrivial component, complete multipartite
  kSearch,        // randomized symplectic-vector search
};

std::string_view to_string(OracleMethod method);

struct OracleResult {
  /// Matrix with support exactly the input graph and rank <= target.
  std::optional<SkewMatrixQ> witness;
  /// The answer is proven. Every found witness is exact; a miss is exact
  /// only when decided by the rank-0 or rank-2 characterizations, and is
  /// otherwise evidence from an exhausted restart budget.
  bool exact = false;
  OracleMethod method = OracleMethod::kZero;
  /// Restart that produced the witness, or -1.
  int restart = -1;
  int restarts_tried = 0;

  bool found() const { return witness.has_value(); }
};

/// Looks for A with support G and rank at most `target_rank` (even,
/// 0..n).
///
/// Ranks 0 and 2 are decided exactly: the zero matrix for edgeless graphs,
/// and for rank 2 a single nontrivial component that is complete
/// multipartite. Larger targets first try those, then search for
/// A = W J W^T with W an n x target matrix and J the standard symplectic
/// form: rows are chosen one vertex at a time from the solution space of
/// the linear conditions that non-neighbours give, with small random
/// integer coefficients, followed by repair sweeps that re-solve each row
/// against all others. Restart k is seeded from (seed, k) alone.
OracleResult oracle_search(const Graph& g, int target_rank, int restarts,
                           std::uint64_t seed = kDefaultSeed);

/// Smallest even target at which oracle_search succeeds, walking up from 0.
std::optional<int> oracle_ladder_value(const Graph& g, int restarts,
                                       std::uint64_t seed = kDefaultSeed);

}  // namespace skewrank

#endif  // SKEWRANK_ORACLE_HPP
