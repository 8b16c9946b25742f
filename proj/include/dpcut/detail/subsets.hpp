#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "dpcut/graph.hpp"

namespace dpcut::detail {

inline int popcount(std::uint64_t x) { return std::popcount(x); }

inline std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

/// internal[S] = |E([S])| for every subset S of a graph with n <= 24 vertices.
inline std::vector<std::uint32_t> internal_edge_table(const std::vector<std::uint64_t>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> internal(std::size_t{1} << n, 0);
  for (std::uint64_t s = 1; s < internal.size(); ++s) {
    auto low = static_cast<std::size_t>(std::countr_zero(s));
    auto rest = s & (s - 1);
    internal[s] = internal[rest] + static_cast<std::uint32_t>(popcount(adj[low] & rest));
  }
  return internal;
}

/// degree_sum[S] = sum of degrees over S.
inline std::vector<std::uint32_t> degree_sum_table(const std::vector<std::uint64_t>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> sum(std::size_t{1} << n, 0);
  for (std::uint64_t s = 1; s < sum.size(); ++s) {
    auto low = static_cast<std::size_t>(std::countr_zero(s));
    sum[s] = sum[s & (s - 1)] + static_cast<std::uint32_t>(popcount(adj[low]));
  }
  return sum;
}

/// Whether the subgraph induced by `set` is connected (empty counts as not).
inline bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t set) {
  if (set == 0) return false;
  std::uint64_t reached = set & (~set + 1);
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (auto f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

}  // namespace dpcut::detail
