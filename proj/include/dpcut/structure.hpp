#pragma once

#include <optional>
#include <vector>

#include "dpcut/connectivity.hpp"
#include "dpcut/product.hpp"

namespace dpcut {

/// How a black/white coloring of G x H looks when read one layer at a time.
///
/// With `layers == LayerKind::H` the layers are the H-layers H_x, indexed by
/// x in V(G); each is entirely black, entirely white, or split with black part
/// exactly C or exactly D, where (C, D) is a proper 2-coloring of H. With
/// `layers == LayerKind::G` the roles of the factors are swapped.
struct LayerPattern {
  LayerKind layers = LayerKind::H;
  VertexSet all_black;  ///< anchors of monochromatic black layers
  VertexSet all_white;  ///< anchors of monochromatic white layers
  VertexSet split_c;    ///< anchors whose layer is black exactly on `c`
  VertexSet split_d;    ///< anchors whose layer is black exactly on `d`
  VertexSet c;          ///< color class in the other factor (empty if no layer is split)
  VertexSet d;

  bool has_split() const { return !split_c.empty() || !split_d.empty(); }

  /// The black set this pattern describes.
  VertexSet rebuild(const ProductGraph& p) const {
    VertexSet black(p.graph().order());
    const bool h_layers = layers == LayerKind::H;
    const auto other = h_layers ? p.n_h() : p.n_g();
    auto at = [&](VertexId anchor, VertexId k) { return h_layers ? p.index(anchor, k) : p.index(k, anchor); };
    for (auto a : all_black.members())
      for (VertexId k = 0; k < other; ++k) black.insert(at(a, k));
    for (auto a : split_c.members())
      for (auto k : c.members()) black.insert(at(a, k));
    for (auto a : split_d.members())
      for (auto k : d.members()) black.insert(at(a, k));
    return black;
  }
};

/// Reads `black` layer by layer; nothing if some split layer is not a proper
/// 2-coloring of its factor or two split layers disagree on the coloring.
inline std::optional<LayerPattern> layer_pattern(const ProductGraph& p, const VertexSet& black, LayerKind kind) {
  const bool h_layers = kind == LayerKind::H;
  const auto& across = h_layers ? p.h_factor() : p.g_factor();
  const auto anchors = h_layers ? p.n_g() : p.n_h();
  const auto other = across.order();

  LayerPattern pat{kind, VertexSet(anchors), VertexSet(anchors), VertexSet(anchors), VertexSet(anchors),
                   VertexSet(other), VertexSet(other)};
  bool have_classes = false;
  for (VertexId a = 0; a < anchors; ++a) {
    VertexSet part(other);
    for (VertexId k = 0; k < other; ++k)
      if (black.contains(h_layers ? p.index(a, k) : p.index(k, a))) part.insert(k);
    if (part.empty()) {
      pat.all_white.insert(a);
    } else if (part.size() == other) {
      pat.all_black.insert(a);
    } else if (!have_classes) {
      for (const auto& e : across.edges())
        if (part.contains(e.u) == part.contains(e.v)) return std::nullopt;
      pat.c = part;
      pat.d = part.complement();
      have_classes = true;
      pat.split_c.insert(a);
    } else if (part == pat.c) {
      pat.split_c.insert(a);
    } else if (part == pat.d) {
      pat.split_d.insert(a);
    } else {
      return std::nullopt;
    }
  }
  return pat;
}

/// Structural types 1..8 matched by one black/white partition of G x H.
///
///   1  every H-layer monochromatic            2  every G-layer monochromatic
///   3  a side with a single vertex
///   4  every H-layer split along a bipartition (C, D) of H, or every G-layer
///      split along a bipartition of G
///   5  H-layers split as in 4, plus monochromatic H-layers of one color only
///   6  the G-layer version of 5
///   7  as 5 with both all-black and all-white H-layers
///   8  as 6 with both all-black and all-white G-layers
///
/// The predicates are symmetric under exchanging black and white, so testing
/// one color assignment covers both.
struct CutTypeSet {
  std::vector<int> matched;  ///< ascending
  std::optional<LayerPattern> h_pattern;
  std::optional<LayerPattern> g_pattern;

  bool has(int type) const { return std::find(matched.begin(), matched.end(), type) != matched.end(); }
  bool unstructured() const { return matched.empty(); }
  /// Smallest matched type, or nothing when unstructured.
  std::optional<int> canonical() const {
    if (matched.empty()) return std::nullopt;
    return matched.front();
  }
};

namespace detail {

/// Types read off one layer direction: {monochromatic, fully split, one
/// monochromatic color, both monochromatic colors}.
inline std::optional<int> pattern_type(const LayerPattern& pat, int mono, int split, int one_color, int two_colors) {
  if (!pat.has_split()) return mono;
  const bool b = !pat.all_black.empty();
  const bool w = !pat.all_white.empty();
  if (!b && !w) return split;
  if (b != w) return one_color;
  return two_colors;
}

}  // namespace detail

inline CutTypeSet classify_partition(const ProductGraph& p, const VertexSet& black) {
  const auto n = p.graph().order();
  if (black.universe() != n) throw InputError("classify_cut: partition universe does not match the product");
  if (black.empty() || black.size() == n) throw InputError("classify_cut: both sides must be nonempty");

  CutTypeSet out;
  std::vector<int> types;
  if (black.size() == 1 || black.size() + 1 == n) types.push_back(3);
  out.h_pattern = layer_pattern(p, black, LayerKind::H);
  out.g_pattern = layer_pattern(p, black, LayerKind::G);
  if (out.h_pattern) types.push_back(*detail::pattern_type(*out.h_pattern, 1, 4, 5, 7));
  if (out.g_pattern) types.push_back(*detail::pattern_type(*out.g_pattern, 2, 4, 6, 8));
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  out.matched = std::move(types);
  return out;
}

inline CutTypeSet classify_cut(const ProductGraph& p, const Cut& cut) {
  if (cut.white != cut.black.complement()) throw InputError("classify_cut: black and white must partition V(G x H)");
  return classify_partition(p, cut.black);
}

struct ClassifiedCut {
  Cut cut;
  CutTypeSet types;
};

struct StructureReport {
  std::size_t lambda = 0;
  bool exempt = false;  ///< a factor is P3 or C4, where unstructured minimum cuts may occur
  std::vector<ClassifiedCut> cuts;
  std::size_t unstructured = 0;
  bool low_type_exists = false;  ///< some minimum cut has a type in 1..6

  /// An unstructured minimum cut outside the P3 / C4 exception.
  bool violation() const { return lambda > 0 && !exempt && unstructured > 0; }
};

/// Enumerates every minimum cut of G x H (sides connected) and classifies it.
inline StructureReport check_structure_theorem(const ProductGraph& p, std::size_t cap = kBruteForceCap) {
  StructureReport r;
  const auto& g = p.g_factor();
  const auto& h = p.h_factor();
  r.exempt = is_p3(g) || is_c4(g) || is_p3(h) || is_c4(h);
  auto cuts = enumerate_min_cuts(p.graph(), cap);
  r.lambda = cuts.empty() ? 0 : cuts.front().size();
  if (!is_connected(p.graph())) r.lambda = 0;
  for (auto& cut : cuts) {
    auto types = classify_cut(p, cut);
    if (types.unstructured()) ++r.unstructured;
    for (int t : types.matched)
      if (t <= 6) r.low_type_exists = true;
    r.cuts.push_back({std::move(cut), std::move(types)});
  }
  return r;
}

inline bool exists_low_type_min_cut(const ProductGraph& p, std::size_t cap = kBruteForceCap) {
  return check_structure_theorem(p, cap).low_type_exists;
}

}  // namespace dpcut
