#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dpcut/formula.hpp"
#include "dpcut/generators.hpp"
#include "dpcut/structure.hpp"

namespace dpcut {

struct SweepConfig {
  std::size_t min_factor_vertices = 2;
  std::size_t max_factor_vertices = 4;
  std::size_t random_pairs = 0;  ///< 0: every ordered pair of labeled connected graphs
  double edge_probability = 0.5;
  std::uint64_t seed = 1;
  OracleKind oracle = OracleKind::Auto;
  std::size_t workers = 1;
  bool check_structure = true;

  void validate() const {
    if (workers < 1) throw InputError("sweep: workers must be >= 1");
    if (min_factor_vertices < 1 || min_factor_vertices > max_factor_vertices)
      throw InputError("sweep: need 1 <= min factor vertices <= max factor vertices");
    if (random_pairs == 0 && max_factor_vertices > gen::kDefaultEnumerationCap)
      throw CapExceeded("sweep (exhaustive)", max_factor_vertices, gen::kDefaultEnumerationCap);
    if (random_pairs > 0 && max_factor_vertices > 11) throw CapExceeded("sweep (random)", max_factor_vertices, 11);
    if (!(edge_probability > 0.0 && edge_probability <= 1.0)) throw InputError("sweep: need 0 < p <= 1");
  }
};

struct SweepRow {
  std::size_t instance = 0;
  std::string g_id;
  std::string h_id;
  std::size_t n_product = 0;
  std::size_t formula = 0;
  std::size_t oracle = 0;
  bool equal = false;
  std::optional<bool> structure_ok;     ///< unset when lambda = 0 or the product is too large
  std::optional<bool> low_type_exists;

  bool failed() const { return !equal || structure_ok == false || low_type_exists == false; }
};

struct FactorPair {
  Graph g;
  Graph h;
};

inline std::vector<FactorPair> sweep_instances(const SweepConfig& cfg) {
  std::vector<FactorPair> out;
  if (cfg.random_pairs == 0) {
    std::vector<Graph> graphs;
    for (auto n = cfg.min_factor_vertices; n <= cfg.max_factor_vertices; ++n)
      gen::for_each_connected(n, [&](const Graph& g) { graphs.push_back(g); });
    for (const auto& g : graphs)
      for (const auto& h : graphs) out.push_back({g, h});
    return out;
  }
  std::mt19937_64 rng(cfg.seed);
  const auto span = cfg.max_factor_vertices - cfg.min_factor_vertices + 1;
  for (std::size_t i = 0; i < cfg.random_pairs; ++i) {
    auto ng = cfg.min_factor_vertices + rng() % span;
    auto g = gen::random_connected(ng, cfg.edge_probability, rng);
    auto nh = cfg.min_factor_vertices + rng() % span;
    auto h = gen::random_connected(nh, cfg.edge_probability, rng);
    out.push_back({std::move(g), std::move(h)});
  }
  return out;
}

inline SweepRow sweep_row(std::size_t instance, const FactorPair& pair, const SweepConfig& cfg) {
  ProductGraph p(pair.g, pair.h);
  SweepRow row;
  row.instance = instance;
  row.g_id = gen::graph_id(pair.g);
  row.h_id = gen::graph_id(pair.h);
  row.n_product = p.graph().order();
  auto report = verify_formula(p, cfg.oracle);
  row.formula = report.formula.lambda;
  row.oracle = report.oracle_lambda;
  row.equal = report.equal;
  if (cfg.check_structure && row.oracle > 0 && row.n_product <= kBruteForceCap) {
    auto s = check_structure_theorem(p);
    row.structure_ok = !s.violation();
    row.low_type_exists = s.low_type_exists;
  }
  return row;
}

/// Rows in instance order, independent of the worker count.
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto instances = sweep_instances(cfg);
  std::vector<SweepRow> rows(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (auto i = next.fetch_add(1); i < instances.size(); i = next.fetch_add(1))
      rows[i] = sweep_row(i, instances[i], cfg);
  };
  if (cfg.workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < cfg.workers; ++w) pool.emplace_back(work);
  }
  return rows;
}

inline constexpr const char* kSweepCsvHeader = "g_id,h_id,n_product,formula,oracle,equal,structure_ok,low_type_exists";

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  auto flag = [](std::optional<bool> b) -> const char* {
    if (!b) return "na";
    return *b ? "true" : "false";
  };
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.g_id << ',' << r.h_id << ',' << r.n_product << ',' << r.formula << ',' << r.oracle << ','
        << (r.equal ? "true" : "false") << ',' << flag(r.structure_ok) << ',' << flag(r.low_type_exists) << '\n';
  }
}

}  // namespace dpcut
