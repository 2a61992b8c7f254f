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

#ifndef SKEWRANK_CERTIFICATE_HPP
#define SKEWRANK_CERTIFICATE_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "skewrank/formulas.hpp"
#include "skewrank/graph.hpp"
#include "skewrank/powers.hpp"
#include "skewrank/skew_matrix.hpp"

namespace skewrank {

enum class LowerKind {
  kParityOnly,      // 2 if the graph has an edge, else 0
  kTriangularBlock, // structurally triangular block with nonzero diagonal
  kComponentSum,    // sum over connected components
};

std::string_view to_string(LowerKind kind);

/// Off-diagonal block of rows row_first..row_last and columns
/// col_first..col_last (1-based, inclusive). Block entry (i, j) is
/// a_{row_first+i-1, col_first+j-1}.
struct TriangularBlock {
  int row_first = 1;
  int row_last = 1;
  int col_first = 1;
  int col_last = 1;

  int size() const { return row_last - row_first + 1; }
};

struct LowerBound {
  int lower_bound = 0;
  LowerKind kind = LowerKind::kParityOnly;
  std::optional<TriangularBlock> block;
};

/// Rank bound valid for every matrix with the given support: 2 when there
/// is an edge, 0 otherwise.
LowerBound parity_lower_bound(const Graph& g);

/// Triangular-block bound for 1 <= r <= n-3: rows 1..n-r against columns
/// r+1..n. Every diagonal pair sits at distance r (an edge) and every pair
/// above it at distance > r (a non-edge), which is checked against
/// path_power_edge. The bound is n-r rounded up to even. Throws
/// std::domain_error when r > n-3.
LowerBound lower_bound_certificate(const PowerSpec& spec);

struct RankCertificate {
  PowerSpec spec;
  FormulaVerdict formula;
  int lower_bound = 0;
  LowerKind lower_kind = LowerKind::kParityOnly;
  std::optional<TriangularBlock> triangular_witness;
  /// Per-component certificates behind a kComponentSum bound, in block
  /// order (even vertices first). Order-1 blocks contribute 0 and are
  /// omitted.
  std::vector<RankCertificate> components;
  SkewMatrixQ upper_witness{1};
  int value = 0;

  bool tight() const { return lower_bound == value; }
};

/// Witness, exact witness rank, structural lower bound and closed-form value
/// for a path power with n >= 2. Any disagreement among them throws
/// std::logic_error.
RankCertificate certify(const PowerSpec& spec);

}  // namespace skewrank

#endif  // SKEWRANK_CERTIFICATE_HPP
