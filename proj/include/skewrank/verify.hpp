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

#ifndef SKEWRANK_VERIFY_HPP
#define SKEWRANK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skewrank/oracle.hpp"

namespace skewrank {

struct VerifyCheck {
  std::string instance;  // e.g. "n=5 r=2"
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string id;
  int max_n = 0;
  std::vector<VerifyCheck> checks;

  bool all_passed() const;
  /// One line per check, then a summary line.
  std::string to_text() const;
};

/// Sweep ids accepted by run_verify, in the order "all" runs them:
///   path             path realizations against the closed form
///   path-power       certificates for P_n^r, 2 <= n <= max_n, 1 <= r <= n
///   strict-odd       certificates for P_n^(r), r odd
///   strict-even      certificates for P_n^(r), r even
///   strict-terminal  shape and value of P_n^(r) for r >= n-2
///   windows          consecutive windows of (strict) path powers (n <= 12)
///   split            parity split of P_n^(2m), m <= max_n/2
///   rank-two         exhaustive rank-2 characterization (n <= 6)
///   observations     component additivity, union subadditivity, and
///                    induced monotonicity through the oracle (n <= 8)
///   oracle           search oracle against the closed forms (n <= 8)
const std::vector<std::string_view>& verify_ids();

inline constexpr int kMaxOrder = 64;
inline constexpr int kOracleRestarts = 200;

/// Throws std::invalid_argument for an unknown id or max_n outside
/// 2..kMaxOrder. Sweeps with a smaller ceiling clamp max_n to it.
VerifyReport run_verify(std::string_view id, int max_n, std::uint64_t seed = kDefaultSeed);

enum class TableKind { kBoth, kPlain, kStrict };

/// CSV with header
/// schema_version,n,r,strict,value,case_tag,lower_bound,witness_rank
/// over 2 <= n <= max_n, 1 <= r <= n. witness_rank is the exact rank of
/// the constructed realization.
std::string run_table(int max_n, TableKind kind = TableKind::kBoth);

}  // namespace skewrank

#endif  // SKEWRANK_VERIFY_HPP
