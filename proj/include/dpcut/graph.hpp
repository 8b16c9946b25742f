#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpcut/errors.hpp"
#include "dpcut/vertex_set.hpp"

namespace dpcut {

/// Undirected edge, stored normalized with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex range [0, n).
///
/// Immutable after construction. Edges are sorted and duplicate-free, and the
/// adjacency lists are exactly their symmetric closure, each sorted ascending.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from endpoint pairs. Rejects out-of-range endpoints, loops
  /// and duplicate edges (in either orientation).
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      auto name = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
        throw InputError("edge " + name + ": endpoint out of range [0," + std::to_string(n) + ")");
      if (a == b) throw InputError("edge " + name + ": loop");
      edges.push_back(normalized(static_cast<VertexId>(a), static_cast<VertexId>(b)));
    }
    return from_edges(n, std::move(edges));
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
  }

  /// Same contract as from_edge_list, for already-typed edges in any orientation.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges) {
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n)
        throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "): endpoint out of range [0," + std::to_string(n) + ")");
      if (e.u == e.v) throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + "): loop");
      e = normalized(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
      throw InputError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");

    Graph g;
    g.n_ = n;
    g.adjacency_.assign(n, {});
    for (const auto& e : edges) {
      g.adjacency_[e.u].push_back(e.v);
      g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    g.edges_ = std::move(edges);
    return g;
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  bool has_edge(VertexId a, VertexId b) const {
    if (a >= n_ || b >= n_) return false;
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
  }

  /// Neighborhood bitmasks, one per vertex; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const {
    if (n_ > 64) throw InputError("adjacency_masks: graph has more than 64 vertices");
    std::vector<std::uint64_t> masks(n_, 0);
    for (const auto& e : edges_) {
      masks[e.u] |= std::uint64_t{1} << e.v;
      masks[e.v] |= std::uint64_t{1} << e.u;
    }
    return masks;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
  static Edge normalized(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

inline std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw InputError("min_degree: empty graph");
  std::size_t best = g.degree(0);
  for (VertexId v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

/// Components in order of their smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  if (g.order() == 0) throw InputError("connected_components: empty graph");
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    VertexSet comp(g.order());
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (auto w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

/// K1 counts as connected.
inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

/// Proper 2-coloring if one exists. Each component's vertex of smallest index
/// goes to the first class, so for connected graphs vertex 0 is in `first`.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  const auto n = g.order();
  std::vector<int> color(n, -1);
  std::vector<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto v = queue[head];
      for (auto w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet first(n), second(n);
  for (VertexId v = 0; v < n; ++v) (color[v] == 0 ? first : second).insert(v);
  return std::make_pair(std::move(first), std::move(second));
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> original;  ///< new index -> vertex of the parent graph
};

/// Subgraph induced by `a`, reindexed densely in ascending vertex order.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a) {
  if (a.universe() != g.order()) throw InputError("induced_subgraph: vertex set universe mismatch");
  InducedSubgraph out;
  out.original = a.members();
  std::vector<VertexId> remap(g.order(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) remap[out.original[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (a.contains(e.u) && a.contains(e.v)) edges.push_back({remap[e.u], remap[e.v]});
  out.graph = Graph::from_edges(out.original.size(), std::move(edges));
  return out;
}

/// Edges with one endpoint in `a` and the other in `b` (the set [A, B]).
inline std::vector<Edge> boundary_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.universe() != g.order() || b.universe() != g.order())
    throw InputError("boundary_edges: vertex set universe mismatch");
  if (a.intersects(b)) throw InputError("boundary_edges: sets overlap");
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))) out.push_back(e);
  }
  return out;
}

/// Isomorphic to the path on three vertices.
inline bool is_p3(const Graph& g) { return g.order() == 3 && g.size() == 2; }

/// Isomorphic to the 4-cycle.
inline bool is_c4(const Graph& g) {
  if (g.order() != 4 || g.size() != 4) return false;
  for (VertexId v = 0; v < 4; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

}  // namespace dpcut
