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

#include "skewrank/witness.hpp"

#include <numeric>
#include <stdexcept>

#include "skewrank/powers.hpp"

namespace skewrank {

namespace {

std::vector<int> interval(int first, int last) {
  std::vector<int> out(static_cast<std::size_t>(last - first + 1));
  std::iota(out.begin(), out.end(), first);
  return out;
}

SkewMatrixQ realize_multipartite_graph(const Graph& g) {
  auto classes = complete_multipartite_partition(g);
  if (!classes) throw std::logic_error("expected a complete multipartite graph");
  return witness_multipartite(g.order(), *classes);
}

void check_pattern(const SkewMatrixQ& a, const Graph& target) {
  if (pattern_of(a) != target) throw std::logic_error("witness support differs from its target graph");
}

}  // namespace

SkewMatrixQ witness_multipartite(std::span<const int> part_sizes) {
  std::vector<std::vector<int>> classes;
  int next = 1;
  for (int size : part_sizes) {
    if (size < 1) throw std::invalid_argument("part sizes must be positive");
    classes.push_back(interval(next, next + size - 1));
    next += size;
  }
  return witness_multipartite(next - 1, classes);
}

SkewMatrixQ witness_multipartite(int order, const std::vector<std::vector<int>>& classes) {
  if (classes.size() < 2)
    throw std::invalid_argument("rank-two realization needs at least two classes");
  std::vector<int> label(static_cast<std::size_t>(order) + 1, 0);
  int covered = 0;
  for (std::size_t p = 0; p < classes.size(); ++p)
    for (int v : classes[p]) {
      if (v < 1 || v > order || label[static_cast<std::size_t>(v)] != 0)
        throw std::invalid_argument("classes must partition the vertex set");
      label[static_cast<std::size_t>(v)] = static_cast<int>(p) + 1;
      ++covered;
    }
  if (covered != order) throw std::invalid_argument("classes must partition the vertex set");
  SkewMatrixQ a(order);
  for (int i = 1; i <= order; ++i)
    for (int j = i + 1; j <= order; ++j)
      a.set(i, j, label[static_cast<std::size_t>(i)] - label[static_cast<std::size_t>(j)]);
  return a;
}

SkewMatrixQ witness_path(int n) {
  if (n < 1) throw std::invalid_argument("path order must be at least 1");
  SkewMatrixQ a(n);
  for (int i = 1; i < n; ++i) a.set(i, i + 1, 1);
  return a;
}

int overlay_scale(const SkewMatrixQ& a, const SkewMatrixQ& b, const Graph& target) {
  if (a.order() != b.order() || a.order() != target.order())
    throw std::invalid_argument("overlay needs matrices and target of equal order");
  if (graph_union(pattern_of(a), pattern_of(b)) != target)
    throw std::invalid_argument("overlay supports do not cover the target exactly");
  // Each shared edge rules out at most one scale.
  int shared = 0;
  for (const Edge& e : target.edges())
    if (a.at(e.u, e.v) != 0 && b.at(e.u, e.v) != 0) ++shared;
  for (int scale = 1; scale <= shared + 1; ++scale)
    if (pattern_of(a + b * mpq_class(scale)) == target) return scale;
  throw std::logic_error("no overlay scale avoids cancellation");
}

SkewMatrixQ overlay(const SkewMatrixQ& a, const SkewMatrixQ& b, const Graph& target) {
  return a + b * mpq_class(overlay_scale(a, b, target));
}

SkewMatrixQ witness_path_power(int n, int r) {
  if (n < 1) throw std::invalid_argument("path order must be at least 1");
  if (r < 1) throw std::invalid_argument("power must be at least 1");
  if (n == 1) return SkewMatrixQ(1);
  const Graph target = power(path(n), r);
  // K_n or K_n minus the edge 1n.
  if (r >= n - 2) return realize_multipartite_graph(target);

  const SkewMatrixQ head = embed(witness_path_power(r + 2, r), n, interval(1, r + 2));
  const SkewMatrixQ tail = embed(witness_path_power(n - 2, r), n, interval(3, n));
  SkewMatrixQ out = overlay(head, tail, target);
  check_pattern(out, target);
  return out;
}

SkewMatrixQ witness_path_strict(int n, int r) {
  if (n < 1) throw std::invalid_argument("path order must be at least 1");
  if (r < 1) throw std::invalid_argument("power must be at least 1");
  if (n == 1) return SkewMatrixQ(1);
  const Graph target = strict_power(path(n), r);

  if (r % 2 != 0) {
    // K_{floor(n/2), ceil(n/2)} split by parity.
    if (r >= n - 2) return realize_multipartite_graph(target);
    const SkewMatrixQ head = embed(witness_path_strict(n - 2, r), n, interval(1, n - 2));
    const SkewMatrixQ tail = embed(witness_path_strict(r + 2, r), n, interval(n - r - 1, n));
    SkewMatrixQ out = overlay(head, tail, target);
    check_pattern(out, target);
    return out;
  }

  if (n == 2) return SkewMatrixQ(2);
  const int half = r / 2;
  const StrictSplit split = split_strict_even(n, half);
  const int evens = split.even_block.order();
  const SkewMatrixQ blocks =
      embed(witness_path_power(evens, half), n, interval(1, evens)) +
      embed(witness_path_power(split.odd_block.order(), half), n, interval(evens + 1, n));
  // Block vertex phi(w) has to land on w.
  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (int w = 1; w <= n; ++w) inverse[static_cast<std::size_t>(split.phi(w) - 1)] = w;
  SkewMatrixQ out = embed(blocks, n, inverse);
  check_pattern(out, target);
  return out;
}

}  // namespace skewrank
