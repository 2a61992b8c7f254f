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

#include "skewrank/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "exact_linear.hpp"
#include "skewrank/witness.hpp"

namespace skewrank {

std::string_view to_string(OracleMethod method) {
  switch (method) {
    case OracleMethod::kZero: return "zero";
    case OracleMethod::kMultipartite: return "multipartite";
    case OracleMethod::kSearch: return "search";
  }
  return "unknown";
}

namespace {

using detail::VectorZ;

constexpr int kRepairSweeps = 3;
constexpr int kCoefficientBound = 3;

OracleResult rank_zero(const Graph& g) {
  OracleResult out;
  out.exact = true;
  out.method = OracleMethod::kZero;
  if (g.edge_count() == 0) out.witness = SkewMatrixQ(g.order());
  return out;
}

OracleResult rank_two(const Graph& g) {
  OracleResult out;
  out.exact = true;
  out.method = OracleMethod::kMultipartite;
  std::vector<Component> nontrivial;
  for (auto& c : connected_components(g))
    if (c.graph.edge_count() > 0) nontrivial.push_back(std::move(c));
  if (nontrivial.empty()) {
    out.method = OracleMethod::kZero;
    out.witness = SkewMatrixQ(g.order());
    return out;
  }
  // Ranks add over components and each nontrivial one needs rank >= 2.
  if (nontrivial.size() > 1) return out;
  const Component& c = nontrivial.front();
  auto classes = complete_multipartite_partition(c.graph);
  if (!classes) return out;
  out.witness = embed(witness_multipartite(c.graph.order(), *classes), g.order(), c.vertices);
  return out;
}

// omega(x, y) = sum_i x_i y_{k+i} - x_{k+i} y_i.
mpz_class symplectic(const VectorZ& x, const VectorZ& y) {
  const std::size_t k = x.size() / 2;
  mpz_class sum = 0;
  for (std::size_t i = 0; i < k; ++i) sum += x[i] * y[k + i] - x[k + i] * y[i];
  return sum;
}

// Coefficients c with c . x = omega(x, w).
VectorZ constraint_row(const VectorZ& w) {
  const std::size_t k = w.size() / 2;
  VectorZ row(w.size());
  for (std::size_t i = 0; i < k; ++i) {
    row[i] = w[k + i];
    row[k + i] = -w[i];
  }
  return row;
}

class SymplecticSearch {
 public:
  SymplecticSearch(const Graph& g, int target, std::mt19937_64& rng)
      : g_(g), dim_(static_cast<std::size_t>(target)), rng_(rng) {}

  std::optional<SkewMatrixQ> run(const std::vector<int>& order) {
    const int n = g_.order();
    rows_.assign(static_cast<std::size_t>(n) + 1, VectorZ());
    assigned_.assign(static_cast<std::size_t>(n) + 1, false);
    for (int v : order) {
      rows_[static_cast<std::size_t>(v)] = resolve(v);
      assigned_[static_cast<std::size_t>(v)] = true;
    }
    for (int sweep = 0; !realizes(); ++sweep) {
      if (sweep == kRepairSweeps) return std::nullopt;
      for (int v : order) rows_[static_cast<std::size_t>(v)] = resolve(v);
    }
    SkewMatrixQ a(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        a.set(i, j, mpq_class(symplectic(row(i), row(j))));
    return a;
  }

 private:
  const VectorZ& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  // Random point in the space of rows orthogonal (under omega) to every
  // assigned non-neighbour of v.
  VectorZ resolve(int v) {
    std::vector<VectorZ> constraints;
    for (int w = 1; w <= g_.order(); ++w)
      if (w != v && assigned_[static_cast<std::size_t>(w)] && !g_.adjacent(v, w))
        constraints.push_back(constraint_row(row(w)));
    const auto basis = detail::integer_nullspace(constraints, dim_);
    std::uniform_int_distribution<int> coefficient(-kCoefficientBound, kCoefficientBound);
    VectorZ out(dim_, 0);
    for (const auto& b : basis) {
      const int c = coefficient(rng_);
      for (std::size_t k = 0; k < dim_; ++k) out[k] += c * b[k];
    }
    detail::make_primitive(out);
    return out;
  }

  bool realizes() const {
    for (int i = 1; i <= g_.order(); ++i)
      for (int j = i + 1; j <= g_.order(); ++j)
        if ((symplectic(row(i), row(j)) != 0) != g_.adjacent(i, j)) return false;
    return true;
  }

  const Graph& g_;
  std::size_t dim_;
  std::mt19937_64& rng_;
  std::vector<VectorZ> rows_;
  std::vector<bool> assigned_;
};

}  // namespace

OracleResult oracle_search(const Graph& g, int target_rank, int restarts, std::uint64_t seed) {
  if (target_rank % 2 != 0) throw std::invalid_argument("target rank must be even");
  if (target_rank < 0 || target_rank > g.order())
    throw std::invalid_argument("target rank must lie in 0..n");
  if (restarts < 0) throw std::invalid_argument("restart budget must be nonnegative");

  OracleResult exact = target_rank == 0 ? rank_zero(g) : rank_two(g);
  if (exact.found() || target_rank <= 2) return exact;

  OracleResult out;
  out.method = OracleMethod::kSearch;
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  for (int k = 0; k < restarts; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    std::iota(order.begin(), order.end(), 1);
    // Alternate the natural vertex order with random ones.
    if (k % 2 == 1) std::shuffle(order.begin(), order.end(), rng);
    out.restarts_tried = k + 1;
    SymplecticSearch search(g, target_rank, rng);
    if (auto a = search.run(order)) {
      if (pattern_of(*a) != g || rank_exact(*a) > target_rank)
        throw std::logic_error("search accepted a matrix that does not realize the graph");
      out.witness = std::move(*a);
      out.exact = true;
      out.restart = k;
      return out;
    }
  }
  return out;
}

std::optional<int> oracle_ladder_value(const Graph& g, int restarts, std::uint64_t seed) {
  for (int target = 0; target <= g.order(); target += 2)
    if (oracle_search(g, target, restarts, seed).found()) return target;
  return std::nullopt;
}

}  // namespace skewrank
