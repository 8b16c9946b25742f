#include <gtest/gtest.h>

#include <random>

#include "dpcut/formula.hpp"
#include "dpcut/generators.hpp"
#include "dpcut/structure.hpp"

namespace dpcut {
namespace {

Graph two_k5_bridge() {
  std::vector<std::pair<int, int>> e;
  for (int base : {0, 5})
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) e.emplace_back(base + u, base + v);
  e.emplace_back(4, 5);
  return Graph::from_edge_list(10, e);
}

/// Triangle {0,1,2}, vertex 3 joined to 0 and 4, 4-cycle 4-5-6-7.
Graph triangle_vertex_square() {
  return Graph::from_edge_list(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
}

VertexSet black_of(const ProductGraph& p, std::initializer_list<std::pair<VertexId, VertexId>> cells) {
  VertexSet s(p.graph().order());
  for (auto [g, h] : cells) s.insert(p.index(g, h));
  return s;
}

void expect_patterns_rebuild(const ProductGraph& p, const VertexSet& black, const CutTypeSet& t) {
  if (t.h_pattern) {
    EXPECT_EQ(t.h_pattern->rebuild(p), black);
  }
  if (t.g_pattern) {
    EXPECT_EQ(t.g_pattern->rebuild(p), black);
  }
}

TEST(Classify, DeltaCutIsType3) {
  auto p = ProductGraph(gen::complete(3), gen::complete(3));
  auto t = classify_cut(p, construct_delta_cut(p));
  EXPECT_TRUE(t.has(3));
  EXPECT_EQ(t.canonical(), 3);
}

TEST(Classify, Type1ConstructionIsType1) {
  auto p = ProductGraph(two_k5_bridge(), gen::complete(3));
  auto cut = construct_type1_cut(p);
  auto t = classify_cut(p, cut);
  EXPECT_TRUE(t.has(1));
  ASSERT_TRUE(t.h_pattern);
  EXPECT_EQ(t.h_pattern->all_black.members(), (std::vector<VertexId>{0, 1, 2, 3, 4}));
  expect_patterns_rebuild(p, cut.black, t);
}

TEST(Classify, PsiCutOnC5TimesK2IsType3And5) {
  auto p = ProductGraph(gen::cycle(5), gen::complete(2));
  auto c = construct_psi_cut(p, PsiOrientation::GH);
  ASSERT_TRUE(c.cut);
  auto t = classify_cut(p, *c.cut);
  EXPECT_EQ(t.matched, (std::vector<int>{3, 5}));
  expect_patterns_rebuild(p, c.cut->black, t);
}

TEST(Classify, SyntheticPatterns) {
  // K3 x C4, C = {0,2}, D = {1,3} in C4.
  auto p = ProductGraph(gen::complete(3), gen::cycle(4));
  // Every H-layer split: type 4.
  auto t4 = black_of(p, {{0, 0}, {0, 2}, {1, 1}, {1, 3}, {2, 0}, {2, 2}});
  EXPECT_TRUE(classify_partition(p, t4).has(4));
  // One H-layer all white: type 5.
  auto t5 = black_of(p, {{0, 0}, {0, 2}, {1, 1}, {1, 3}});
  EXPECT_EQ(classify_partition(p, t5).matched, (std::vector<int>{5}));
  // One black, one white, one split: type 7.
  auto t7 = black_of(p, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}});
  EXPECT_EQ(classify_partition(p, t7).matched, (std::vector<int>{7}));

  // Transposed on C4 x K3: G-layers.
  auto q = ProductGraph(gen::cycle(4), gen::complete(3));
  auto t6 = black_of(q, {{0, 0}, {2, 0}, {1, 1}, {3, 1}});
  EXPECT_EQ(classify_partition(q, t6).matched, (std::vector<int>{6}));
  auto t8 = black_of(q, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(classify_partition(q, t8).matched, (std::vector<int>{8}));
  auto t2 = black_of(q, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  EXPECT_TRUE(classify_partition(q, t2).has(2));

  for (const auto* s : {&t4, &t5, &t7}) expect_patterns_rebuild(p, *s, classify_partition(p, *s));
  for (const auto* s : {&t6, &t8, &t2}) expect_patterns_rebuild(q, *s, classify_partition(q, *s));
}

TEST(Classify, SplitLayerThatIsNotABipartitionMatchesNothing) {
  auto p = ProductGraph(gen::complete(3), gen::complete(3));
  auto t = classify_partition(p, black_of(p, {{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_TRUE(t.unstructured());
  EXPECT_FALSE(t.canonical());
}

TEST(Classify, InvariantUnderColorSwap) {
  std::mt19937_64 rng(3);
  auto p = ProductGraph(gen::cycle(4), gen::complete(3));
  for (int trial = 0; trial < 500; ++trial) {
    auto mask = 1 + rng() % ((std::uint64_t{1} << 12) - 2);
    auto black = VertexSet::from_mask(12, mask);
    EXPECT_EQ(classify_partition(p, black).matched, classify_partition(p, black.complement()).matched);
  }
}

TEST(Classify, PatternsRebuildRandomPartitions) {
  std::mt19937_64 rng(4);
  auto p = ProductGraph(gen::path(3), gen::cycle(5));
  for (int trial = 0; trial < 2000; ++trial) {
    auto mask = 1 + rng() % ((std::uint64_t{1} << 15) - 2);
    auto black = VertexSet::from_mask(15, mask);
    expect_patterns_rebuild(p, black, classify_partition(p, black));
  }
}

TEST(Classify, RecoloringType8GivesType6AndType7GivesType5) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    // Type 8 on G x H with G bipartite: each G-layer black, white, or split along (X, Y).
    auto g = gen::complete_bipartite(1 + rng() % 2, 1 + rng() % 2);
    auto h = gen::random_connected(3 + rng() % 3, 0.6, rng);
    ProductGraph p(g, h);
    auto [x, y] = *bipartition(g);
    LayerPattern pat{LayerKind::G, VertexSet(h.order()), VertexSet(h.order()), VertexSet(h.order()),
                     VertexSet(h.order()), x, y};
    for (VertexId a = 0; a < h.order(); ++a) {
      switch (a < 3 ? a : rng() % 4) {
        case 0: pat.all_black.insert(a); break;
        case 1: pat.all_white.insert(a); break;
        case 2: pat.split_c.insert(a); break;
        default: pat.split_d.insert(a); break;
      }
    }
    auto black8 = pat.rebuild(p);
    ASSERT_TRUE(classify_partition(p, black8).has(8));
    pat.all_white |= pat.all_black;
    pat.all_black = VertexSet(h.order());
    EXPECT_TRUE(classify_partition(p, pat.rebuild(p)).has(6));

    // Transposed: type 7 on H x G recolors to type 5.
    ProductGraph q(h, g);
    pat.layers = LayerKind::H;
    pat.all_black = VertexSet(h.order());
    for (VertexId a = 0; a < h.order(); ++a)
      if (a % 2 == 1 && pat.all_white.contains(a)) {
        pat.all_white.erase(a);
        pat.all_black.insert(a);
      }
    if (pat.all_black.empty() || pat.all_white.empty()) continue;
    ASSERT_TRUE(classify_partition(q, pat.rebuild(q)).has(7));
    pat.all_white |= pat.all_black;
    pat.all_black = VertexSet(h.order());
    EXPECT_TRUE(classify_partition(q, pat.rebuild(q)).has(5));
  }
}

TEST(Classify, RejectsMalformedPartition) {
  auto p = ProductGraph(gen::complete(3), gen::complete(2));
  EXPECT_THROW(classify_partition(p, VertexSet(6)), InputError);
  EXPECT_THROW(classify_partition(p, VertexSet::full(6)), InputError);
  EXPECT_THROW(classify_partition(p, VertexSet(5, {0})), InputError);
  Cut bad{VertexSet(6, {0}), VertexSet(6, {1}), {}};
  EXPECT_THROW(classify_cut(p, bad), InputError);
}

TEST(MinCutStructure, K3TimesK3AllType3) {
  auto r = check_structure_theorem(ProductGraph(gen::complete(3), gen::complete(3)));
  EXPECT_EQ(r.lambda, 4u);
  EXPECT_EQ(r.cuts.size(), 9u);
  for (const auto& c : r.cuts) EXPECT_TRUE(c.types.has(3));
  EXPECT_FALSE(r.violation());
  EXPECT_TRUE(r.low_type_exists);
}

TEST(MinCutStructure, C5TimesK2AllMatched) {
  auto r = check_structure_theorem(ProductGraph(gen::cycle(5), gen::complete(2)));
  EXPECT_EQ(r.lambda, 2u);
  EXPECT_EQ(r.cuts.size(), 45u);  // C10: any 2 of its 10 edges
  EXPECT_EQ(r.unstructured, 0u);
  EXPECT_FALSE(r.violation());
  EXPECT_TRUE(exists_low_type_min_cut(ProductGraph(gen::cycle(5), gen::complete(2))));
}

TEST(MinCutStructure, P3AndC4PairsAreExempt) {
  auto r = check_structure_theorem(ProductGraph(gen::path(3), gen::complete(3)));
  EXPECT_TRUE(r.exempt);
  auto s = check_structure_theorem(ProductGraph(gen::complete(3), gen::cycle(4)));
  EXPECT_TRUE(s.exempt);
  EXPECT_FALSE(check_structure_theorem(ProductGraph(gen::complete(3), gen::complete(2))).exempt);
}

TEST(MinCutStructure, UnstructuredMinimumCutExistsWithP3Factor) {
  // P3 x (triangle - vertex - square): removing (a,y)(x,d) and (b,y)(x,c),
  // with P3 = a-x-b, y = 3 and N(y) = {c, d} = {0, 4}, leaves two components.
  ProductGraph p(gen::path(3), triangle_vertex_square());
  auto lambda = edge_connectivity(p.graph()).lambda;
  EXPECT_EQ(lambda, 2u);
  EXPECT_EQ(lambda_product_formula(p).lambda, 2u);

  auto edge = [&](VertexId a, VertexId b) { return Edge{std::min(a, b), std::max(a, b)}; };
  const auto e1 = edge(p.index(0, 3), p.index(1, 4));
  const auto e2 = edge(p.index(2, 3), p.index(1, 0));
  std::vector<Edge> kept;
  for (const auto& e : p.graph().edges())
    if (!(e == e1) && !(e == e2)) kept.push_back(e);
  auto comps = connected_components(Graph::from_edges(p.graph().order(), kept));
  ASSERT_EQ(comps.size(), 2u);

  auto cut = make_cut(p.graph(), comps[0]);
  EXPECT_EQ(cut.size(), lambda);
  EXPECT_TRUE(is_connected(induced_subgraph(p.graph(), cut.black).graph));
  EXPECT_TRUE(is_connected(induced_subgraph(p.graph(), cut.white).graph));
  EXPECT_TRUE(classify_cut(p, cut).unstructured());
}

TEST(MinCutStructure, NoUnstructuredCutsBelowTheCap) {
  // P3 or C4 against any connected graph on at most 4 vertices: every
  // minimum cut still has a type. The example above needs 24 vertices.
  for (const auto& f : {gen::path(3), gen::cycle(4)})
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& h : gen::enumerate_connected(n)) {
        auto r = check_structure_theorem(ProductGraph(f, h));
        EXPECT_EQ(r.unstructured, 0u);
      }
}

}  // namespace
}  // namespace dpcut
