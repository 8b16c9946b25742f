#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dpcut/graph.hpp"

namespace dpcut {

/// Direct (tensor) product G x H. Vertex (g, h) is stored at index g * nH + h,
/// so every H-layer is a contiguous index range.
class ProductGraph {
public:
  ProductGraph(Graph g, Graph h) : g_(std::move(g)), h_(std::move(h)) {
    if (g_.order() == 0 || h_.order() == 0) throw InputError("direct_product: empty factor");
    std::vector<Edge> edges;
    edges.reserve(2 * g_.size() * h_.size());
    for (const auto& eg : g_.edges()) {
      for (const auto& eh : h_.edges()) {
        edges.push_back({index(eg.u, eh.u), index(eg.v, eh.v)});
        edges.push_back({index(eg.u, eh.v), index(eg.v, eh.u)});
      }
    }
    graph_ = Graph::from_edges(g_.order() * h_.order(), std::move(edges));
  }

  const Graph& graph() const { return graph_; }
  const Graph& g_factor() const { return g_; }
  const Graph& h_factor() const { return h_; }
  std::size_t n_g() const { return g_.order(); }
  std::size_t n_h() const { return h_.order(); }

  VertexId index(VertexId g, VertexId h) const { return static_cast<VertexId>(g * h_.order() + h); }
  std::pair<VertexId, VertexId> coords(VertexId v) const {
    return {static_cast<VertexId>(v / h_.order()), static_cast<VertexId>(v % h_.order())};
  }

  /// Comment recorded alongside a serialized product.
  std::string encoding_note() const {
    return "direct product nG=" + std::to_string(n_g()) + " nH=" + std::to_string(n_h()) +
           " encoding: vertex (g,h) -> g*nH+h";
  }

private:
  Graph g_;
  Graph h_;
  Graph graph_;
};

inline ProductGraph direct_product(const Graph& g, const Graph& h) { return ProductGraph(g, h); }

enum class LayerKind {
  G,  ///< G-layer G_y = V(G) x {y}, anchored at y in H
  H,  ///< H-layer H_x = {x} x V(H), anchored at x in G
};

struct Layer {
  LayerKind kind;
  VertexId anchor;
  VertexSet vertices;
};

inline Layer layer(const ProductGraph& p, LayerKind kind, VertexId anchor) {
  VertexSet set(p.graph().order());
  if (kind == LayerKind::H) {
    if (anchor >= p.n_g()) throw InputError("layer: H-layer anchor outside V(G)");
    for (VertexId h = 0; h < p.n_h(); ++h) set.insert(p.index(anchor, h));
  } else {
    if (anchor >= p.n_h()) throw InputError("layer: G-layer anchor outside V(H)");
    for (VertexId g = 0; g < p.n_g(); ++g) set.insert(p.index(g, anchor));
  }
  return {kind, anchor, std::move(set)};
}

/// Connectivity of G x H decided from the factors alone. An edgeless factor
/// makes the product edgeless, which is connected only as a single vertex.
inline bool weichsel_connected(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) throw InputError("weichsel_connected: empty factor");
  if (g.size() == 0 || h.size() == 0) return g.order() * h.order() == 1;
  if (!is_connected(g) || !is_connected(h)) return false;
  return !is_bipartite(g) || !is_bipartite(h);
}

/// The two components of g x K2 for connected bipartite g with classes A, B
/// and V(K2) = {0, 1}: (A x {0}) u (B x {1}) and (A x {1}) u (B x {0}).
inline std::pair<VertexSet, VertexSet> k2_components(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw InputError("k2_components: graph must be connected");
  auto parts = bipartition(g);
  if (!parts) throw InputError("k2_components: graph is not bipartite");
  const auto& [a, b] = *parts;

  ProductGraph p(g, Graph::from_edge_list(2, {{0, 1}}));
  VertexSet c1(p.graph().order()), c2(p.graph().order());
  for (auto v : a.members()) {
    c1.insert(p.index(v, 0));
    c2.insert(p.index(v, 1));
  }
  for (auto v : b.members()) {
    c1.insert(p.index(v, 1));
    c2.insert(p.index(v, 0));
  }
  for (const auto* c : {&c1, &c2}) {
    if (!is_connected(induced_subgraph(p.graph(), *c).graph))
      throw std::logic_error("k2_components: class is not connected in g x K2");
  }
  return {std::move(c1), std::move(c2)};
}

}  // namespace dpcut
