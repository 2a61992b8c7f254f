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

#ifndef SKEWRANK_GRAPH_HPP
#define SKEWRANK_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace skewrank {

/// Unordered vertex pair, stored with u < v. Vertices are 1-based.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the vertex set 1..n.
///
/// Values are immutable once constructed. Construction validates that every
/// pair is loop-free and in range; duplicate pairs collapse.
class Graph {
 public:
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);

  /// Builds the graph whose edges are the pairs i < j with `adjacent(i, j)`.
  template <typename Pred>
  static Graph from_predicate(int order, Pred&& adjacent) {
    Graph g(order);
    for (int i = 1; i <= order; ++i)
      for (int j = i + 1; j <= order; ++j)
        if (adjacent(i, j)) g.set(i, j);
    return g;
  }

  int order() const { return n_; }
  bool adjacent(int i, int j) const;
  int degree(int v) const;
  std::size_t edge_count() const { return edge_count_; }
  /// Sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<int> neighbors(int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void set(int i, int j);
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::size_t edge_count_ = 0;
  std::vector<bool> adj_;
};

/// Vertex bijection between two graphs of equal order, with the induced
/// pairing of edges. `vertex_map[v - 1]` is the image of vertex v.
struct IsoMapping {
  std::vector<int> vertex_map;
  std::vector<std::pair<Edge, Edge>> edge_map;

  int operator()(int v) const { return vertex_map.at(static_cast<std::size_t>(v - 1)); }
};

Graph edgeless(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_multipartite(std::span<const int> parts);
/// Star K_{1,n-1} centered at vertex 1.
Graph star(int n);
/// Triangle 1-2-3 with vertex 4 pendant at 3.
Graph paw();

/// Relabels W[k] as vertex k+1.
Graph induced_subgraph(const Graph& g, std::span<const int> window);
/// Edge-set union on a shared vertex set; orders must match.
Graph graph_union(const Graph& a, const Graph& b);
/// `a` on 1..|a| followed by `b` shifted by |a|.
Graph disjoint_union(const Graph& a, const Graph& b);

struct Component {
  std::vector<int> vertices;  // ascending
  Graph graph;
};

/// Ordered by smallest vertex.
std::vector<Component> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Builds the mapping (with its edge pairing) from a vertex permutation,
/// or nothing if `vertex_map` is not an isomorphism from `a` onto `b`.
std::optional<IsoMapping> make_isomorphism(const Graph& a, const Graph& b,
                                           std::vector<int> vertex_map);
/// Checks bijectivity and the edge condition in both directions.
bool is_isomorphism(const Graph& a, const Graph& b, const IsoMapping& map);

/// Colour refinement followed by backtracking over colour classes.
std::optional<IsoMapping> find_isomorphism(const Graph& a, const Graph& b);

bool has_induced(const Graph& g, const Graph& h);

/// Classes of the non-adjacency relation when it is an equivalence (the
/// graph is complete multipartite, possibly with a single class), ordered by
/// smallest vertex.
std::optional<std::vector<std::vector<int>>> complete_multipartite_partition(
    const Graph& g);

}  // namespace skewrank

#endif  // SKEWRANK_GRAPH_HPP
