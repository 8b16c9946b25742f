#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dpcut/graph.hpp"

namespace dpcut::gen {

inline Graph path(std::size_t n) {
  if (n < 1) throw InputError("path: need n >= 1");
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("cycle: need n >= 3");
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, static_cast<VertexId>(n - 1)});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete(std::size_t n) {
  if (n < 1) throw InputError("complete: need n >= 1");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, std::move(edges));
}

/// K_{m,n}: vertices 0..m-1 on one side, m..m+n-1 on the other.
inline Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InputError("complete_bipartite: need m, n >= 1");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < m; ++u)
    for (VertexId v = 0; v < n; ++v) edges.push_back({u, static_cast<VertexId>(m + v)});
  return Graph::from_edges(m + n, std::move(edges));
}

inline Graph hypercube(std::size_t d) {
  if (d > 20) throw InputError("hypercube: need d <= 20");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (std::size_t bit = 0; bit < d; ++bit) {
      VertexId v = u ^ (VertexId{1} << bit);
      if (u < v) edges.push_back({u, v});
    }
  return Graph::from_edges(n, std::move(edges));
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
    edges.push_back({i, i + 5});
  }
  return Graph::from_edges(10, std::move(edges));
}

/// Uniform double in [0, 1) from the top 53 bits; unlike the std
/// distributions this is identical on every standard library.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// G(n, p) with pairs visited in lexicographic order.
inline Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  if (n < 1) throw InputError("random: need n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("random: need 0 <= p <= 1");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (unit_draw(rng) < p) edges.push_back({u, v});
  return Graph::from_edges(n, std::move(edges));
}

inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_gnp(n, p, rng);
}

/// Rejection-samples G(n, p) until the result is connected.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  if (p <= 0.0 && n > 1) throw InputError("random_connected: p must be positive");
  for (;;) {
    auto g = random_gnp(n, p, rng);
    if (is_connected(g)) return g;
  }
}

/// Pairs of K_n in lexicographic order; bit i of an edge mask selects pair i.
inline std::vector<Edge> complete_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  return pairs;
}

inline Graph from_pair_mask(std::size_t n, std::uint64_t mask) {
  auto pairs = complete_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if ((mask >> i) & 1U) edges.push_back(pairs[i]);
  return Graph::from_edges(n, std::move(edges));
}

inline std::uint64_t pair_mask(const Graph& g) {
  if (g.order() > 11) throw InputError("pair_mask: graph too large for a 64-bit pair mask");
  auto pairs = complete_pairs(g.order());
  std::uint64_t mask = 0;
  for (const auto& e : g.edges()) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), e);
    mask |= std::uint64_t{1} << static_cast<std::size_t>(it - pairs.begin());
  }
  return mask;
}

/// Stable identifier "<n>-<pair mask>" for small labeled graphs.
inline std::string graph_id(const Graph& g) {
  return std::to_string(g.order()) + "-" + std::to_string(pair_mask(g));
}

inline constexpr std::size_t kDefaultEnumerationCap = 5;

/// Calls `visit` for every labeled connected simple graph on n vertices, in
/// increasing pair-mask order.
inline void for_each_connected(std::size_t n, const std::function<void(const Graph&)>& visit,
                               std::size_t cap = kDefaultEnumerationCap) {
  if (n < 1) throw InputError("enumerate_connected: need n >= 1");
  if (n > cap) throw CapExceeded("enumerate_connected", n, cap);
  if (n > 11) throw CapExceeded("enumerate_connected", n, 11);
  const std::size_t m = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    auto g = from_pair_mask(n, mask);
    if (is_connected(g)) visit(g);
  }
}

inline std::vector<Graph> enumerate_connected(std::size_t n, std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) { out.push_back(g); }, cap);
  return out;
}

}  // namespace dpcut::gen
