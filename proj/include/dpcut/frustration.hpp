#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "dpcut/detail/subsets.hpp"
#include "dpcut/graph.hpp"

namespace dpcut {

inline constexpr std::size_t kMaxCutCap = 24;
inline constexpr std::size_t kRhoCap = 16;

struct MaxCutResult {
  std::size_t value = 0;
  VertexSet side;   ///< contains vertex 0 whenever n >= 1
  VertexSet other;
};

/// Exact maximum cut by Gray-code enumeration of the 2^(n-1) bipartitions
/// with vertex 0 fixed on `side`; each step flips one vertex and updates the
/// cut value in O(1). Among optima, `side` has the smallest bitmask.
inline MaxCutResult max_cut_exact(const Graph& g, std::size_t cap = kMaxCutCap) {
  const std::size_t n = g.order();
  if (n > cap || n > 63) throw CapExceeded("max_cut_exact", n, std::min<std::size_t>(cap, 63));
  if (n == 0) return {0, VertexSet(0), VertexSet(0)};

  const auto adj = g.adjacency_masks();
  std::uint64_t side = 1;
  long long value = static_cast<long long>(std::popcount(adj[0]));
  long long best = value;
  std::uint64_t best_side = side;

  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < steps; ++k) {
    // Gray codes k-1 and k differ in bit ctz(k); vertex ctz(k)+1 flips.
    auto v = static_cast<std::size_t>(std::countr_zero(k)) + 1;
    auto bit = std::uint64_t{1} << v;
    long long deg = std::popcount(adj[v]);
    long long inside = std::popcount(adj[v] & side);
    if (side & bit) {
      value += 2 * inside - deg;
      side &= ~bit;
    } else {
      value += deg - 2 * inside;
      side |= bit;
    }
    if (value > best || (value == best && side < best_side)) {
      best = value;
      best_side = side;
    }
  }
  auto s = VertexSet::from_mask(n, best_side);
  auto o = s.complement();
  return {static_cast<std::size_t>(best), std::move(s), std::move(o)};
}

struct FrustrationResult {
  std::size_t phi = 0;
  VertexSet first;   ///< color class holding vertex 0
  VertexSet second;
  std::vector<Edge> frustrated_edges;  ///< monochromatic under (first, second)
};

/// Bipartite edge frustration: the fewest edges whose deletion leaves a
/// bipartite graph, i.e. |E| - maxcut. The witness coloring is the max-cut one.
inline FrustrationResult frustration(const Graph& g, std::size_t cap = kMaxCutCap) {
  auto cut = max_cut_exact(g, cap);
  FrustrationResult r;
  r.phi = g.size() - cut.value;
  for (const auto& e : g.edges())
    if (cut.side.contains(e.u) == cut.side.contains(e.v)) r.frustrated_edges.push_back(e);
  r.first = std::move(cut.side);
  r.second = std::move(cut.other);
  return r;
}

struct RhoResult {
  std::size_t rho = 0;
  VertexSet a;   ///< nonempty
  VertexSet b;   ///< V(G) \ a, may be empty
  VertexSet a1;  ///< holds the smallest vertex of a
  VertexSet a2;
};

/// rho(G) = min over nonempty A of 2 phi([A]) + |[A, V \ A]|.
///
/// phi([A]) is min over A1 subset of A of |E([A1])| + |E([A \ A1])|, taken from
/// a table of internal edge counts; over all A this walks every (A1, A2, B)
/// assignment once, about 3^n / 2 steps. Witnesses are the smallest bitmasks
/// achieving the optimum: first A, then A1 (which holds min A).
inline RhoResult rho(const Graph& g, std::size_t cap = kRhoCap) {
  const std::size_t n = g.order();
  if (n == 0) throw InputError("rho: empty graph");
  if (n > cap || n > 24) throw CapExceeded("rho", n, std::min<std::size_t>(cap, 24));

  const auto adj = g.adjacency_masks();
  const auto internal = detail::internal_edge_table(adj);
  const auto degree_sum = detail::degree_sum_table(adj);
  const auto all = detail::full_mask(n);

  auto split_phi = [&](std::uint64_t a, std::uint64_t* best_a1) {
    const auto low = a & (~a + 1);
    const auto rest = a & ~low;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    std::uint64_t arg = low;
    // Submasks of `rest` in decreasing order; keep the smallest on ties.
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const auto a1 = low | sub;
      const auto mono = internal[a1] + internal[a & ~a1];
      if (mono < best || (mono == best && a1 < arg)) {
        best = mono;
        arg = a1;
      }
      if (sub == 0) break;
    }
    if (best_a1 != nullptr) *best_a1 = arg;
    return best;
  };

  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::uint64_t best_a = 0;
  for (std::uint64_t a = 1; a <= all; ++a) {
    const auto boundary = degree_sum[a] - 2 * internal[a];
    if (boundary >= best) continue;  // phi term is nonnegative
    const auto value = 2 * split_phi(a, nullptr) + boundary;
    if (value < best) {
      best = value;
      best_a = a;
    }
  }

  std::uint64_t a1 = 0;
  split_phi(best_a, &a1);
  RhoResult r;
  r.rho = best;
  r.a = VertexSet::from_mask(n, best_a);
  r.b = r.a.complement();
  r.a1 = VertexSet::from_mask(n, a1);
  r.a2 = VertexSet::from_mask(n, best_a & ~a1);
  return r;
}

struct PsiResult {
  std::size_t psi = 0;
  std::size_t rho_g = 0;
  std::size_t phi_h = 0;
  std::size_t edges_g = 0;
  std::size_t edges_h = 0;
};

/// psi(G, H) = rho(G) |E(H)| + 2 phi(H) |E(G)|.
inline PsiResult psi(const Graph& g, const Graph& h, std::size_t rho_cap = kRhoCap,
                     std::size_t max_cut_cap = kMaxCutCap) {
  PsiResult r;
  r.rho_g = rho(g, rho_cap).rho;
  r.phi_h = frustration(h, max_cut_cap).phi;
  r.edges_g = g.size();
  r.edges_h = h.size();
  r.psi = r.rho_g * r.edges_h + 2 * r.phi_h * r.edges_g;
  return r;
}

}  // namespace dpcut
