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

#include "exact_linear.hpp"

#include <utility>

namespace skewrank::detail {

void make_primitive(VectorZ& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

std::vector<VectorZ> integer_nullspace(const std::vector<VectorZ>& rows, std::size_t dim) {
  std::vector<std::vector<mpq_class>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) m.emplace_back(row.begin(), row.end());

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const mpq_class inv = 1 / m[rank][col];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const mpq_class f = m[i][col];
      for (std::size_t j = col; j < dim; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<VectorZ> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(dim, 0);
    x[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = -m[k][free];
    mpz_class den = 1;
    for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    VectorZ v(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      mpq_class scaled = x[j] * den;
      v[j] = scaled.get_num();
    }
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace skewrank::detail
