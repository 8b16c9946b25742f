#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "dpcut/connectivity.hpp"
#include "dpcut/frustration.hpp"
#include "dpcut/product.hpp"

namespace dpcut {

/// The five upper bounds whose minimum is lambda(G x H), listed in the order
/// used to pick a witness when several coincide.
enum class FormulaTerm { Delta, Type1, Type2, PsiGH, PsiHG };

inline constexpr std::array<FormulaTerm, 5> kWitnessOrder = {FormulaTerm::Delta, FormulaTerm::Type1, FormulaTerm::Type2,
                                                             FormulaTerm::PsiGH, FormulaTerm::PsiHG};

inline std::string_view term_name(FormulaTerm t) {
  switch (t) {
    case FormulaTerm::Type1: return "type1";
    case FormulaTerm::Type2: return "type2";
    case FormulaTerm::Delta: return "delta";
    case FormulaTerm::PsiGH: return "psi_gh";
    case FormulaTerm::PsiHG: return "psi_hg";
  }
  return "?";
}

struct FormulaCaps {
  std::size_t rho = kRhoCap;
  std::size_t max_cut = kMaxCutCap;
};

/// lambda of a factor as it enters the formula; K1 and disconnected graphs give 0.
inline std::size_t factor_lambda(const Graph& g) { return g.order() < 2 ? 0 : edge_connectivity(g).lambda; }

// ---------------------------------------------------------------------------
// Witness constructions. Each returns a cut of the product whose size is the
// corresponding upper bound (at most that bound for the psi cuts).

/// Black = X x V(H) for the black side X of a minimum cut of G; size 2 lambda(G) |E(H)|.
inline Cut construct_type1_cut(const ProductGraph& p) {
  const auto& g = p.g_factor();
  if (g.order() < 2 || !is_connected(g)) throw InputError("construct_type1_cut: G must be connected with >= 2 vertices");
  const auto side = edge_connectivity(g).witness->black;
  VertexSet black(p.graph().order());
  for (auto x : side.members())
    for (VertexId y = 0; y < p.n_h(); ++y) black.insert(p.index(x, y));
  return make_cut(p.graph(), std::move(black));
}

/// Black = V(G) x Y for the black side Y of a minimum cut of H; size 2 lambda(H) |E(G)|.
inline Cut construct_type2_cut(const ProductGraph& p) {
  const auto& h = p.h_factor();
  if (h.order() < 2 || !is_connected(h)) throw InputError("construct_type2_cut: H must be connected with >= 2 vertices");
  const auto side = edge_connectivity(h).witness->black;
  VertexSet black(p.graph().order());
  for (auto y : side.members())
    for (VertexId x = 0; x < p.n_g(); ++x) black.insert(p.index(x, y));
  return make_cut(p.graph(), std::move(black));
}

/// The edges around one vertex (u, v) minimizing deg(u) deg(v); size delta(G) delta(H).
inline Cut construct_delta_cut(const ProductGraph& p) {
  const auto& pg = p.graph();
  if (pg.order() < 2) throw InputError("construct_delta_cut: product needs at least 2 vertices");
  VertexId best = 0;
  for (VertexId v = 1; v < pg.order(); ++v)
    if (pg.degree(v) < pg.degree(best)) best = v;
  VertexSet black(pg.order());
  black.insert(best);
  return make_cut(pg, std::move(black));
}

enum class PsiOrientation { GH, HG };

struct PsiConstruction {
  std::size_t psi = 0;        ///< the closed-form bound
  std::optional<Cut> cut;     ///< absent when the assignment leaves a side empty
};

/// Diagonal construction for psi(G, H): with {A, B} and A = A1 u A2 from the
/// rho(G) witness and C u D a max-cut coloring of H, black is
/// (A1 x C) u (A2 x D) and everything else, including B x V(H), is white.
/// HG swaps the roles of the factors. The cut has at most psi edges.
inline PsiConstruction construct_psi_cut(const ProductGraph& p, PsiOrientation orient, const FormulaCaps& caps = {}) {
  const bool gh = orient == PsiOrientation::GH;
  const auto& first = gh ? p.g_factor() : p.h_factor();
  const auto& second = gh ? p.h_factor() : p.g_factor();

  const auto r = rho(first, caps.rho);
  const auto f = frustration(second, caps.max_cut);

  PsiConstruction out;
  out.psi = r.rho * second.size() + 2 * f.phi * first.size();

  VertexSet black(p.graph().order());
  auto paint = [&](const VertexSet& rows, const VertexSet& cols) {
    for (auto a : rows.members())
      for (auto c : cols.members()) black.insert(gh ? p.index(a, c) : p.index(c, a));
  };
  paint(r.a1, f.first);
  paint(r.a2, f.second);
  if (!black.empty() && black.size() < black.universe()) out.cut = make_cut(p.graph(), std::move(black));
  return out;
}

// ---------------------------------------------------------------------------

struct FormulaBreakdown {
  std::size_t type1 = 0;   ///< 2 lambda(G) |E(H)|
  std::size_t type2 = 0;   ///< 2 lambda(H) |E(G)|
  std::size_t delta = 0;   ///< delta(G x H) = delta(G) delta(H)
  std::size_t psi_gh = 0;
  std::size_t psi_hg = 0;
  std::size_t lambda = 0;
  std::vector<FormulaTerm> achieving;  ///< in kWitnessOrder
  std::optional<FormulaTerm> witness_term;
  std::optional<Cut> witness;          ///< absent when lambda = 0

  std::size_t term(FormulaTerm t) const {
    switch (t) {
      case FormulaTerm::Type1: return type1;
      case FormulaTerm::Type2: return type2;
      case FormulaTerm::Delta: return delta;
      case FormulaTerm::PsiGH: return psi_gh;
      case FormulaTerm::PsiHG: return psi_hg;
    }
    return 0;
  }
};

/// Builds the witness cut for one term, or nothing when that construction's
/// preconditions fail on these factors.
inline std::optional<Cut> construct_term_cut(const ProductGraph& p, FormulaTerm t, const FormulaCaps& caps = {}) {
  auto usable = [](const Graph& f) { return f.order() >= 2 && is_connected(f); };
  switch (t) {
    case FormulaTerm::Delta:
      if (p.graph().order() < 2) return std::nullopt;
      return construct_delta_cut(p);
    case FormulaTerm::Type1:
      if (!usable(p.g_factor())) return std::nullopt;
      return construct_type1_cut(p);
    case FormulaTerm::Type2:
      if (!usable(p.h_factor())) return std::nullopt;
      return construct_type2_cut(p);
    case FormulaTerm::PsiGH: return construct_psi_cut(p, PsiOrientation::GH, caps).cut;
    case FormulaTerm::PsiHG: return construct_psi_cut(p, PsiOrientation::HG, caps).cut;
  }
  return std::nullopt;
}

/// lambda(G x H) = min{2 lambda(G)|E(H)|, 2 lambda(H)|E(G)|, delta(G x H), psi(G,H), psi(H,G)}.
inline FormulaBreakdown lambda_product_formula(const ProductGraph& p, const FormulaCaps& caps = {}) {
  const auto& g = p.g_factor();
  const auto& h = p.h_factor();

  FormulaBreakdown b;
  b.type1 = 2 * factor_lambda(g) * h.size();
  b.type2 = 2 * factor_lambda(h) * g.size();
  b.delta = min_degree(g) * min_degree(h);
  b.psi_gh = psi(g, h, caps.rho, caps.max_cut).psi;
  b.psi_hg = psi(h, g, caps.rho, caps.max_cut).psi;
  b.lambda = std::min({b.type1, b.type2, b.delta, b.psi_gh, b.psi_hg});
  for (auto t : kWitnessOrder)
    if (b.term(t) == b.lambda) b.achieving.push_back(t);

  if (b.lambda > 0) {
    for (auto t : b.achieving) {
      if (auto cut = construct_term_cut(p, t, caps)) {
        b.witness_term = t;
        b.witness = std::move(cut);
        break;
      }
    }
  }
  return b;
}

inline FormulaBreakdown lambda_product_formula(const Graph& g, const Graph& h, const FormulaCaps& caps = {}) {
  return lambda_product_formula(ProductGraph(g, h), caps);
}

enum class OracleKind { Auto, BruteForce, MinCutAlgorithm };

struct VerifyReport {
  FormulaBreakdown formula;
  std::size_t oracle_lambda = 0;
  OracleKind oracle_used = OracleKind::BruteForce;
  bool equal = false;
  std::optional<FormulaTerm> best_term;
  std::optional<Cut> best_witness;  ///< smallest of the constructed cuts
};

/// Compares the formula against an exact minimum cut of the built product:
/// exhaustive bipartitions up to kBruteForceCap vertices, Stoer-Wagner beyond.
inline VerifyReport verify_formula(const ProductGraph& p, OracleKind oracle = OracleKind::Auto,
                                   const FormulaCaps& caps = {}) {
  const auto n = p.graph().order();
  if (n < 2) throw InputError("verify_formula: product needs at least 2 vertices");
  if (oracle == OracleKind::BruteForce && n > kBruteForceCap)
    throw CapExceeded("verify_formula (brute-force oracle)", n, kBruteForceCap);
  if (oracle == OracleKind::Auto) oracle = n <= kBruteForceCap ? OracleKind::BruteForce : OracleKind::MinCutAlgorithm;

  VerifyReport r;
  r.formula = lambda_product_formula(p, caps);
  r.oracle_used = oracle;
  r.oracle_lambda = oracle == OracleKind::BruteForce ? brute_force_min_cut(p.graph()).lambda
                                                      : edge_connectivity(p.graph()).lambda;
  r.equal = r.formula.lambda == r.oracle_lambda;
  for (auto t : kWitnessOrder) {
    auto cut = construct_term_cut(p, t, caps);
    if (cut && (!r.best_witness || cut->size() < r.best_witness->size())) {
      r.best_term = t;
      r.best_witness = std::move(cut);
    }
  }
  return r;
}

inline VerifyReport verify_formula(const Graph& g, const Graph& h, OracleKind oracle = OracleKind::Auto,
                                   const FormulaCaps& caps = {}) {
  return verify_formula(ProductGraph(g, h), oracle, caps);
}

}  // namespace dpcut
