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

#ifndef SKEWRANK_SKEW_MATRIX_HPP
#define SKEWRANK_SKEW_MATRIX_HPP

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewrank/graph.hpp"

namespace skewrank {

/// n x n skew-symmetric matrix over the rationals.
///
/// Only the strict upper triangle is stored, so a_ii = 0 and a_ji = -a_ij
/// hold by construction. Indices are 1-based.
class SkewMatrixQ {
 public:
  explicit SkewMatrixQ(int order);

  int order() const { return n_; }
  mpq_class at(int i, int j) const;
  /// Sets a_ij (and hence a_ji = -a_ij). i != j.
  void set(int i, int j, const mpq_class& value);

  SkewMatrixQ operator+(const SkewMatrixQ& rhs) const;
  SkewMatrixQ operator*(const mpq_class& scale) const;
  bool operator==(const SkewMatrixQ& rhs) const;

 private:
  std::size_t slot(int i, int j) const;  // i < j

  int n_;
  std::vector<mpq_class> upper_;
};

/// Exact rank by fraction-free (Bareiss) elimination on an integer
/// rescaling of the rows. Pivots are taken as the first nonzero entry in
/// column order.
int rank_exact(const SkewMatrixQ& a);

/// Support graph: ij is an edge iff a_ij != 0.
Graph pattern_of(const SkewMatrixQ& a);

/// Places `block` on the vertices `window` of an order-n zero matrix;
/// block vertex k lands on window[k-1].
SkewMatrixQ embed(const SkewMatrixQ& block, int order, std::span<const int> window);

/// "p/q" with q >= 1 and gcd(p, q) = 1, e.g. "-3/1".
std::string fraction_string(const mpq_class& q);
/// Accepts "p/q" or a plain integer.
mpq_class parse_fraction(std::string_view text);

/// {"n": N, "upper": [[i, j, "p/q"], ...]} listing the nonzero entries with
/// i < j in row-major order; `schema_version` is written first.
std::string matrix_to_json(const SkewMatrixQ& a);
SkewMatrixQ matrix_from_json(std::string_view text);

}  // namespace skewrank

#endif  // SKEWRANK_SKEW_MATRIX_HPP
