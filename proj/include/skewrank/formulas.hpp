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

#ifndef SKEWRANK_FORMULAS_HPP
#define SKEWRANK_FORMULAS_HPP

#include <string_view>

#include "skewrank/graph.hpp"
#include "skewrank/powers.hpp"

namespace skewrank {

/// Which closed-form clause produced a minimum skew rank value. The string
/// forms (see to_string) are stable and appear in CLI output.
enum class CaseTag {
  kPathSingleVertex,
  kPathEven,
  kPathOdd,
  kPowerSmallOrder,      // n in {2, 3}
  kPowerBandEven,        // r <= n-3, n-r even
  kPowerBandOdd,         // r <= n-3, n-r odd
  kPowerNearComplete,    // r >= n-2
  kStrictOrderTwoOdd,
  kStrictOrderTwoEven,
  kStrictOrderThree,
  kStrictOddOddOrder,    // r odd, r <= n-3, n odd
  kStrictOddEvenOrder,   // r odd, r <= n-3, n even
  kStrictOddBipartite,   // r odd, r >= n-2
  kStrictEvenOddOrder,   // r even, r <= n-3, n odd
  kStrictEvenHalvesEven, // r = 2s, n = 2t, r <= n-3, t-s even
  kStrictEvenHalvesOdd,  // r = 2s, n = 2t, r <= n-3, t-s odd
  kStrictEvenTwoCliques, // r even, r >= n-2
};

std::string_view to_string(CaseTag tag);

struct FormulaVerdict {
  int value = 0;
  CaseTag case_tag = CaseTag::kPathSingleVertex;
  PowerSpec spec;
};

/// Minimum skew rank of P_n: n for even n, n-1 for odd n.
FormulaVerdict mrs_path(int n);
/// Minimum skew rank of P_n^r, n >= 2.
FormulaVerdict mrs_path_power(int n, int r);
/// Minimum skew rank of P_n^(r), n >= 2.
FormulaVerdict mrs_path_strict(int n, int r);
/// Dispatches on spec.strict.
FormulaVerdict mrs(const PowerSpec& spec);

/// True iff the connected graph (order >= 2) is complete multipartite with
/// at least two classes, i.e. has minimum skew rank 2. Throws
/// std::invalid_argument for disconnected or single-vertex input.
bool mrs_is_two(const Graph& g);

/// Whether the symmetric minimum rank of P_n^r meets its skew counterpart
/// (n >= 3).
bool equality_with_symmetric_power(int n, int r);
/// Same question for the strict power P_n^(r) (n >= 3).
bool equality_with_symmetric_strict(int n, int r);

}  // namespace skewrank

#endif  // SKEWRANK_FORMULAS_HPP
