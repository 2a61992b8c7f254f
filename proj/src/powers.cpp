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

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewrank {

void PowerSpec::validate() const {
  if (n < 1) throw std::invalid_argument("path order must be at least 1");
  if (r < 1) throw std::invalid_argument("power must be at least 1");
}

std::optional<int> PowerSpec::half_power() const {
  if (r % 2 != 0) return std::nullopt;
  return r / 2;
}

std::optional<int> PowerSpec::half_order() const {
  if (n % 2 != 0) return std::nullopt;
  return n / 2;
}

namespace {

class BoolMatrix {
 public:
  explicit BoolMatrix(int n) : n_(n), bits_(static_cast<std::size_t>(n * n), false) {}

  static BoolMatrix identity(int n) {
    BoolMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  static BoolMatrix adjacency(const Graph& g) {
    BoolMatrix m(g.order());
    for (const Edge& e : g.edges()) {
      m.set(e.u - 1, e.v - 1);
      m.set(e.v - 1, e.u - 1);
    }
    return m;
  }

  bool at(int i, int j) const { return bits_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j) { bits_[static_cast<std::size_t>(i * n_ + j)] = true; }

  BoolMatrix operator*(const BoolMatrix& rhs) const {
    BoolMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        if (!at(i, k)) continue;
        for (int j = 0; j < n_; ++j)
          if (rhs.at(k, j)) out.set(i, j);
      }
    return out;
  }

  BoolMatrix operator|(const BoolMatrix& rhs) const {
    BoolMatrix out(*this);
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (rhs.bits_[k]) out.bits_[k] = true;
    return out;
  }

  bool operator==(const BoolMatrix&) const = default;

  Graph off_diagonal_graph() const {
    return Graph::from_predicate(n_, [&](int i, int j) { return at(i - 1, j - 1); });
  }

 private:
  int n_;
  std::vector<bool> bits_;
};

}  // namespace

Graph power(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("power must be at least 1");
  const BoolMatrix adj = BoolMatrix::adjacency(g);
  // reach_k holds the pairs joined by a walk of length <= k.
  BoolMatrix reach = BoolMatrix::identity(g.order()) | adj;
  for (int k = 1; k < r; ++k) {
    BoolMatrix next = reach | reach * adj;
    if (next == reach) break;
    reach = std::move(next);
  }
  return reach.off_diagonal_graph();
}

Graph strict_power(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("power must be at least 1");
  BoolMatrix result = BoolMatrix::identity(g.order());
  BoolMatrix base = BoolMatrix::adjacency(g);
  for (int e = r; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result.off_diagonal_graph();
}

Graph path_power(const PowerSpec& spec) {
  spec.validate();
  return spec.strict ? strict_power(path(spec.n), spec.r) : power(path(spec.n), spec.r);
}

bool path_power_edge(const PowerSpec& spec, int i, int j) {
  spec.validate();
  if (i < 1 || j < 1 || i > spec.n || j > spec.n)
    throw std::out_of_range("vertex out of range for path of order " + std::to_string(spec.n));
  const int d = std::abs(i - j);
  if (d < 1 || d > spec.r) return false;
  if (!spec.strict) return true;
  return spec.n >= 2 && (spec.r - d) % 2 == 0;
}

StrictSplit split_strict_even(int n, int m) {
  if (n < 3) throw std::invalid_argument("strict split needs n >= 3");
  if (m < 1) throw std::invalid_argument("strict split needs m >= 1");
  const int evens = n / 2;
  const int odds = n - evens;
  Graph even_block = power(path(evens), m);
  Graph odd_block = power(path(odds), m);
  std::vector<int> phi(static_cast<std::size_t>(n));
  for (int w = 1; w <= n; ++w)
    phi[static_cast<std::size_t>(w - 1)] = (w % 2 == 0) ? w / 2 : evens + (w + 1) / 2;
  auto map = make_isomorphism(strict_power(path(n), 2 * m), disjoint_union(even_block, odd_block),
                              std::move(phi));
  if (!map) throw std::logic_error("parity split is not an isomorphism");
  return {std::move(*map), std::move(even_block), std::move(odd_block)};
}

}  // namespace skewrank
