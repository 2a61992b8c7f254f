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

#include "skewrank/formulas.hpp"

#include <stdexcept>
#include <string>

namespace skewrank {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kPathSingleVertex: return "path-single-vertex";
    case CaseTag::kPathEven: return "path-even";
    case CaseTag::kPathOdd: return "path-odd";
    case CaseTag::kPowerSmallOrder: return "power-small-order";
    case CaseTag::kPowerBandEven: return "power-band-even";
    case CaseTag::kPowerBandOdd: return "power-band-odd";
    case CaseTag::kPowerNearComplete: return "power-near-complete";
    case CaseTag::kStrictOrderTwoOdd: return "strict-order-two-odd";
    case CaseTag::kStrictOrderTwoEven: return "strict-order-two-even";
    case CaseTag::kStrictOrderThree: return "strict-order-three";
    case CaseTag::kStrictOddOddOrder: return "strict-odd-odd-order";
    case CaseTag::kStrictOddEvenOrder: return "strict-odd-even-order";
    case CaseTag::kStrictOddBipartite: return "strict-odd-bipartite";
    case CaseTag::kStrictEvenOddOrder: return "strict-even-odd-order";
    case CaseTag::kStrictEvenHalvesEven: return "strict-even-halves-even";
    case CaseTag::kStrictEvenHalvesOdd: return "strict-even-halves-odd";
    case CaseTag::kStrictEvenTwoCliques: return "strict-even-two-cliques";
  }
  return "unknown";
}

namespace {

void require_order(int n, int min_n) {
  if (n < min_n)
    throw std::invalid_argument("path order must be at least " + std::to_string(min_n));
}

void require_power(int r) {
  if (r < 1) throw std::invalid_argument("power must be at least 1");
}

}  // namespace

FormulaVerdict mrs_path(int n) {
  require_order(n, 1);
  const PowerSpec spec{n, 1, false};
  if (n == 1) return {0, CaseTag::kPathSingleVertex, spec};
  if (n % 2 == 0) return {n, CaseTag::kPathEven, spec};
  return {n - 1, CaseTag::kPathOdd, spec};
}

FormulaVerdict mrs_path_power(int n, int r) {
  require_order(n, 2);
  require_power(r);
  const PowerSpec spec{n, r, false};
  if (n <= 3) return {2, CaseTag::kPowerSmallOrder, spec};
  if (r >= n - 2) return {2, CaseTag::kPowerNearComplete, spec};
  if ((n - r) % 2 == 0) return {n - r, CaseTag::kPowerBandEven, spec};
  return {n - r + 1, CaseTag::kPowerBandOdd, spec};
}

FormulaVerdict mrs_path_strict(int n, int r) {
  require_order(n, 2);
  require_power(r);
  const PowerSpec spec{n, r, true};
  if (n == 2) {
    if (r % 2 != 0) return {2, CaseTag::kStrictOrderTwoOdd, spec};
    return {0, CaseTag::kStrictOrderTwoEven, spec};
  }
  // K_2 plus an isolated vertex for even r; P_3 itself for odd r.
  if (n == 3) return {2, CaseTag::kStrictOrderThree, spec};

  if (r % 2 != 0) {
    if (r >= n - 2) return {2, CaseTag::kStrictOddBipartite, spec};
    if (n % 2 != 0) return {n - r, CaseTag::kStrictOddOddOrder, spec};
    return {n - r + 1, CaseTag::kStrictOddEvenOrder, spec};
  }

  if (r >= n - 2) return {4, CaseTag::kStrictEvenTwoCliques, spec};
  if (n % 2 != 0) return {n - r + 1, CaseTag::kStrictEvenOddOrder, spec};
  const int s = r / 2, t = n / 2;
  if ((t - s) % 2 == 0) return {n - r, CaseTag::kStrictEvenHalvesEven, spec};
  return {n - r + 2, CaseTag::kStrictEvenHalvesOdd, spec};
}

FormulaVerdict mrs(const PowerSpec& spec) {
  return spec.strict ? mrs_path_strict(spec.n, spec.r) : mrs_path_power(spec.n, spec.r);
}

bool mrs_is_two(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("rank-two test needs at least two vertices");
  if (!is_connected(g)) throw std::invalid_argument("rank-two test needs a connected graph");
  auto parts = complete_multipartite_partition(g);
  return parts && parts->size() >= 2;
}

bool equality_with_symmetric_power(int n, int r) {
  require_order(n, 3);
  require_power(r);
  return r <= n - 3 && (n - r) % 2 == 0;
}

bool equality_with_symmetric_strict(int n, int r) {
  require_order(n, 3);
  require_power(r);
  if (n % 2 != 0 && r % 2 != 0) return true;
  if (n % 2 == 0 && r % 2 == 0) return ((n / 2) - (r / 2)) % 2 == 0;
  return false;
}

}  // namespace skewrank
