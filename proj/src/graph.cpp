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

#include "skewrank/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skewrank {

Graph::Graph(int order) : n_(order) {
  if (order < 1) throw std::invalid_argument("graph order must be at least 1");
  adj_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), false);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) set(e.u, e.v);
}

void Graph::set(int i, int j) {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(i) + "," +
                                std::to_string(j));
  if (i == j) throw std::invalid_argument("loops are not allowed");
  if (adj_[index(i, j)]) return;
  adj_[index(i, j)] = true;
  adj_[index(j, i)] = true;
  ++edge_count_;
}

bool Graph::adjacent(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("vertex out of range");
  return adj_[index(i, j)];
}

int Graph::degree(int v) const {
  int d = 0;
  for (int w = 1; w <= n_; ++w) d += adjacent(v, w) ? 1 : 0;
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (adj_[index(i, j)]) out.push_back({i, j});
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 1; w <= n_; ++w)
    if (adjacent(v, w)) out.push_back(w);
  return out;
}

Graph edgeless(int n) { return Graph(n); }

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path order must be at least 1");
  return Graph::from_predicate(n, [](int i, int j) { return j - i == 1; });
}

Graph complete(int n) {
  return Graph::from_predicate(n, [](int, int) { return true; });
}

Graph complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw std::invalid_argument("complete multipartite graph needs a part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] < 1) throw std::invalid_argument("part sizes must be positive");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  return Graph::from_predicate(static_cast<int>(part_of.size()), [&](int i, int j) {
    return part_of[static_cast<std::size_t>(i - 1)] != part_of[static_cast<std::size_t>(j - 1)];
  });
}

Graph star(int n) {
  return Graph::from_predicate(n, [](int i, int) { return i == 1; });
}

Graph paw() {
  const Edge edges[] = {{1, 2}, {1, 3}, {2, 3}, {3, 4}};
  return Graph(4, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const int> window) {
  if (window.empty()) throw std::invalid_argument("induced subgraph needs a vertex");
  std::vector<bool> seen(static_cast<std::size_t>(g.order()) + 1, false);
  for (int v : window) {
    if (v < 1 || v > g.order()) throw std::invalid_argument("vertex out of range");
    if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("duplicate vertex");
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Graph::from_predicate(static_cast<int>(window.size()), [&](int i, int j) {
    return g.adjacent(window[static_cast<std::size_t>(i - 1)],
                      window[static_cast<std::size_t>(j - 1)]);
  });
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw std::invalid_argument("union needs graphs of equal order");
  return Graph::from_predicate(a.order(),
                               [&](int i, int j) { return a.adjacent(i, j) || b.adjacent(i, j); });
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  return Graph::from_predicate(na + b.order(), [&](int i, int j) {
    if (j <= na) return a.adjacent(i, j);
    if (i > na) return b.adjacent(i - na, j - na);
    return false;
  });
}

std::vector<Component> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Component> out;
  for (int root = 1; root <= n; ++root) {
    if (label[static_cast<std::size_t>(root)] != 0) continue;
    const int id = static_cast<int>(out.size()) + 1;
    std::vector<int> members{root};
    label[static_cast<std::size_t>(root)] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int w : g.neighbors(members[head])) {
        if (label[static_cast<std::size_t>(w)] != 0) continue;
        label[static_cast<std::size_t>(w)] = id;
        members.push_back(w);
      }
    }
    std::sort(members.begin(), members.end());
    Graph sub = induced_subgraph(g, members);
    out.push_back({std::move(members), std::move(sub)});
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::optional<IsoMapping> make_isomorphism(const Graph& a, const Graph& b,
                                           std::vector<int> vertex_map) {
  IsoMapping map{std::move(vertex_map), {}};
  if (!is_isomorphism(a, b, map)) return std::nullopt;
  for (const Edge& e : a.edges()) {
    int x = map(e.u), y = map(e.v);
    map.edge_map.push_back({e, Edge{std::min(x, y), std::max(x, y)}});
  }
  return map;
}

bool is_isomorphism(const Graph& a, const Graph& b, const IsoMapping& map) {
  const int n = a.order();
  if (b.order() != n || static_cast<int>(map.vertex_map.size()) != n) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int image : map.vertex_map) {
    if (image < 1 || image > n || hit[static_cast<std::size_t>(image)]) return false;
    hit[static_cast<std::size_t>(image)] = true;
  }
  // With a bijective vertex map, checking every pair covers both directions.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (a.adjacent(i, j) != b.adjacent(map(i), map(j))) return false;
  return true;
}

namespace {

using Colouring = std::vector<int>;  // index v-1

// Refines the colourings of both graphs together so colour ids are
// comparable across them. Returns false once the histograms diverge.
bool refine_jointly(const Graph& a, const Graph& b, Colouring& ca, Colouring& cb) {
  const int n = a.order();
  ca.assign(static_cast<std::size_t>(n), 0);
  cb.assign(static_cast<std::size_t>(n), 0);
  std::size_t classes = 1;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const Graph& g, const Colouring& c, int v) {
      std::vector<int> nbr;
      for (int w : g.neighbors(v)) nbr.push_back(c[static_cast<std::size_t>(w - 1)]);
      std::sort(nbr.begin(), nbr.end());
      return std::make_pair(c[static_cast<std::size_t>(v - 1)], std::move(nbr));
    };
    std::vector<std::pair<int, std::vector<int>>> sa, sb;
    for (int v = 1; v <= n; ++v) {
      sa.push_back(signature(a, ca, v));
      sb.push_back(signature(b, cb, v));
    }
    for (auto& s : sa) ids.emplace(s, 0);
    for (auto& s : sb) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    Colouring na(static_cast<std::size_t>(n)), nb(static_cast<std::size_t>(n));
    for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v) {
      na[v] = ids[sa[v]];
      nb[v] = ids[sb[v]];
    }
    Colouring ha(static_cast<std::size_t>(next), 0), hb(static_cast<std::size_t>(next), 0);
    for (int c : na) ++ha[static_cast<std::size_t>(c)];
    for (int c : nb) ++hb[static_cast<std::size_t>(c)];
    if (ha != hb) return false;
    ca = std::move(na);
    cb = std::move(nb);
    if (ids.size() == classes) return true;
    classes = ids.size();
  }
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, Colouring ca, Colouring cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    const int n = a.order();
    map_.assign(static_cast<std::size_t>(n) + 1, 0);
    used_.assign(static_cast<std::size_t>(n) + 1, false);
    // Smallest colour classes first, then BFS-like: prefer vertices adjacent
    // to already ordered ones so adjacency checks prune early.
    std::vector<int> class_size(static_cast<std::size_t>(n) + 1, 0);
    for (int c : ca_) ++class_size[static_cast<std::size_t>(c)];
    std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);
    for (int step = 0; step < n; ++step) {
      int best = 0;
      std::pair<int, int> best_key{0, 0};
      for (int v = 1; v <= n; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (int w : order_) links += a.adjacent(v, w) ? 1 : 0;
        std::pair<int, int> key{links, -class_size[static_cast<std::size_t>(colour_a(v))]};
        if (best == 0 || key > best_key) {
          best = v;
          best_key = key;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
    }
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 1; w <= b_.order(); ++w) {
      if (used_[static_cast<std::size_t>(w)] || colour_b(w) != colour_a(v)) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const int u = order_[k];
        consistent = a_.adjacent(v, u) == b_.adjacent(w, map_[static_cast<std::size_t>(u)]);
      }
      if (!consistent) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      if (run(depth + 1)) return true;
      used_[static_cast<std::size_t>(w)] = false;
    }
    return false;
  }

  std::vector<int> mapping() const { return {map_.begin() + 1, map_.end()}; }

 private:
  int colour_a(int v) const { return ca_[static_cast<std::size_t>(v - 1)]; }
  int colour_b(int v) const { return cb_[static_cast<std::size_t>(v - 1)]; }

  const Graph& a_;
  const Graph& b_;
  Colouring ca_, cb_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 1; v <= g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<IsoMapping> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (degree_sequence(a) != degree_sequence(b)) return std::nullopt;
  Colouring ca, cb;
  if (!refine_jointly(a, b, ca, cb)) return std::nullopt;
  Matcher matcher(a, b, std::move(ca), std::move(cb));
  if (!matcher.run()) return std::nullopt;
  auto map = make_isomorphism(a, b, matcher.mapping());
  if (!map) throw std::logic_error("isomorphism search produced an invalid mapping");
  return map;
}

bool has_induced(const Graph& g, const Graph& h) {
  const int n = g.order(), k = h.order();
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    if (find_isomorphism(induced_subgraph(g, pick), h)) return true;
    // Next k-subset in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::optional<std::vector<std::vector<int>>> complete_multipartite_partition(const Graph& g) {
  const int n = g.order();
  std::vector<int> part(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::vector<int>> classes;
  for (int v = 1; v <= n; ++v) {
    if (part[static_cast<std::size_t>(v)] >= 0) continue;
    std::vector<int> cls{v};
    part[static_cast<std::size_t>(v)] = static_cast<int>(classes.size());
    for (int w = v + 1; w <= n; ++w) {
      if (g.adjacent(v, w)) continue;
      if (part[static_cast<std::size_t>(w)] >= 0) return std::nullopt;
      part[static_cast<std::size_t>(w)] = static_cast<int>(classes.size());
      cls.push_back(w);
    }
    classes.push_back(std::move(cls));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (g.adjacent(i, j) == (part[static_cast<std::size_t>(i)] == part[static_cast<std::size_t>(j)]))
        return std::nullopt;
  return classes;
}

}  // namespace skewrank
