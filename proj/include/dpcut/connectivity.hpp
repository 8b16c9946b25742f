#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "dpcut/detail/subsets.hpp"
#include "dpcut/graph.hpp"

namespace dpcut {

/// A black/white bipartition of V(g) and the edges between the two sides.
struct Cut {
  VertexSet black;
  VertexSet white;
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
};

/// Cut with the given black side; white is the complement. Both sides must be nonempty.
inline Cut make_cut(const Graph& g, VertexSet black) {
  if (black.universe() != g.order()) throw InputError("make_cut: vertex set universe mismatch");
  auto white = black.complement();
  if (black.empty() || white.empty()) throw InputError("make_cut: both sides must be nonempty");
  auto edges = boundary_edges(g, black, white);
  return {std::move(black), std::move(white), std::move(edges)};
}

/// Whether removing cut.edges leaves no path between black and white.
inline bool separates(const Graph& g, const Cut& cut) {
  if (cut.black.empty() || cut.white.empty()) return false;
  for (const auto& e : g.edges()) {
    bool crosses = cut.black.contains(e.u) != cut.black.contains(e.v);
    if (crosses && !std::binary_search(cut.edges.begin(), cut.edges.end(), e)) return false;
  }
  return true;
}

struct CutResult {
  std::size_t lambda = 0;
  std::optional<Cut> witness;  ///< absent when the graph is disconnected
};

inline constexpr std::size_t kBruteForceCap = 20;

/// Exact edge connectivity by Stoer-Wagner minimum-cut phases. Ties in the
/// maximum-adjacency order go to the smallest vertex index, so the result is
/// deterministic. The witness black side always contains vertex 0.
inline CutResult edge_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw InputError("edge_connectivity: need at least 2 vertices");
  if (!is_connected(g)) return {0, std::nullopt};

  std::vector<std::vector<std::int64_t>> weight(n, std::vector<std::int64_t>(n, 0));
  for (const auto& e : g.edges()) {
    weight[e.u][e.v] = 1;
    weight[e.v][e.u] = 1;
  }
  std::vector<std::vector<VertexId>> group(n);
  for (VertexId v = 0; v < n; ++v) group[v] = {v};
  std::vector<VertexId> active(n);
  for (VertexId v = 0; v < n; ++v) active[v] = v;

  auto best = std::numeric_limits<std::int64_t>::max();
  std::vector<VertexId> best_side;
  std::vector<std::int64_t> attach(n);
  std::vector<bool> added(n);

  while (active.size() > 1) {
    for (auto v : active) {
      attach[v] = 0;
      added[v] = false;
    }
    VertexId prev = active.front();
    for (std::size_t step = 0; step < active.size(); ++step) {
      VertexId sel = 0;
      bool found = false;
      for (auto v : active) {
        if (added[v]) continue;
        if (!found || attach[v] > attach[sel]) {
          sel = v;
          found = true;
        }
      }
      added[sel] = true;
      if (step + 1 == active.size()) {
        if (attach[sel] < best) {
          best = attach[sel];
          best_side = group[sel];
        }
        for (auto v : active) {
          weight[prev][v] += weight[sel][v];
          weight[v][prev] = weight[prev][v];
        }
        weight[prev][prev] = 0;
        group[prev].insert(group[prev].end(), group[sel].begin(), group[sel].end());
        std::erase(active, sel);
      } else {
        for (auto v : active)
          if (!added[v]) attach[v] += weight[sel][v];
        prev = sel;
      }
    }
  }

  VertexSet black(n);
  for (auto v : best_side) black.insert(v);
  if (!black.contains(0)) black = black.complement();
  auto cut = make_cut(g, std::move(black));
  return {cut.size(), std::move(cut)};
}

/// Exhaustive oracle over all 2^(n-1) bipartitions with vertex 0 black. Among
/// minimum cuts the witness has the smallest black bitmask (bit i = vertex i).
inline CutResult brute_force_min_cut(const Graph& g, std::size_t cap = kBruteForceCap) {
  const std::size_t n = g.order();
  if (n < 2) throw InputError("brute_force_min_cut: need at least 2 vertices");
  if (n > cap || n > 24) throw CapExceeded("brute_force_min_cut", n, std::min<std::size_t>(cap, 24));
  if (!is_connected(g)) return {0, std::nullopt};

  const auto adj = g.adjacency_masks();
  const auto internal = detail::internal_edge_table(adj);
  const auto degree_sum = detail::degree_sum_table(adj);
  const auto all = detail::full_mask(n);

  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask < all; mask += 2) {
    auto boundary = degree_sum[mask] - 2 * internal[mask];
    if (boundary < best) {
      best = boundary;
      best_mask = mask;
    }
  }
  auto cut = make_cut(g, VertexSet::from_mask(n, best_mask));
  return {cut.size(), std::move(cut)};
}

/// Every bipartition whose boundary has size lambda(g) and whose two sides each
/// induce a connected subgraph. Listed once per unordered pair (black holds
/// vertex 0), in increasing black bitmask order.
inline std::vector<Cut> enumerate_min_cuts(const Graph& g, std::size_t cap = kBruteForceCap) {
  const std::size_t n = g.order();
  if (n < 2) throw InputError("enumerate_min_cuts: need at least 2 vertices");
  if (n > cap || n > 24) throw CapExceeded("enumerate_min_cuts", n, std::min<std::size_t>(cap, 24));

  const auto adj = g.adjacency_masks();
  const auto internal = detail::internal_edge_table(adj);
  const auto degree_sum = detail::degree_sum_table(adj);
  const auto all = detail::full_mask(n);

  std::uint32_t lambda = std::numeric_limits<std::uint32_t>::max();
  for (std::uint64_t mask = 1; mask < all; mask += 2)
    lambda = std::min(lambda, degree_sum[mask] - 2 * internal[mask]);

  std::vector<Cut> out;
  for (std::uint64_t mask = 1; mask < all; mask += 2) {
    if (degree_sum[mask] - 2 * internal[mask] != lambda) continue;
    if (!detail::mask_connected(adj, mask) || !detail::mask_connected(adj, all & ~mask)) continue;
    out.push_back(make_cut(g, VertexSet::from_mask(n, mask)));
  }
  return out;
}

}  // namespace dpcut
