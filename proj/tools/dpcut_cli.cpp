// dpcut: edge connectivity of direct products from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dpcut/dpcut.hpp"

namespace {

using nlohmann::ordered_json;
using namespace dpcut;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

ordered_json members(const VertexSet& s) { return s.members(); }

ordered_json edge_array(const std::vector<Edge>& edges) {
  auto out = ordered_json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

ordered_json cut_json(const Cut& c) {
  return {{"black", members(c.black)}, {"white", members(c.white)}, {"cut_edges", edge_array(c.edges)}};
}

ordered_json pattern_json(const std::optional<LayerPattern>& p) {
  if (!p) return nullptr;
  return {{"layers", p->layers == LayerKind::H ? "H" : "G"},
          {"all_black", members(p->all_black)},
          {"all_white", members(p->all_white)},
          {"split_c", members(p->split_c)},
          {"split_d", members(p->split_d)},
          {"c", members(p->c)},
          {"d", members(p->d)}};
}

ordered_json types_json(const CutTypeSet& t) {
  ordered_json j;
  j["types"] = t.matched;
  j["canonical"] = t.canonical() ? ordered_json(*t.canonical()) : ordered_json(nullptr);
  j["h_pattern"] = pattern_json(t.h_pattern);
  j["g_pattern"] = pattern_json(t.g_pattern);
  return j;
}

/// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

OracleKind parse_oracle(const std::string& s) {
  if (s == "auto") return OracleKind::Auto;
  if (s == "brute") return OracleKind::BruteForce;
  return OracleKind::MinCutAlgorithm;
}

const std::vector<std::string> kOracleNames = {"auto", "brute", "mincut"};

struct Options {
  std::string g_path, h_path, out_path, csv_path;
  std::string oracle = "auto";
  std::vector<VertexId> black;
  SweepConfig sweep;
  bool no_structure = false;
  std::string family;
  std::size_t n = 0, m = 0, d = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool connected = false;
};

int cmd_product(const Options& o) {
  ProductGraph p(io::read_edge_list_file(o.g_path), io::read_edge_list_file(o.h_path));
  emit(o.out_path, io::format_edge_list(p.graph(), {p.encoding_note()}));
  return kOk;
}

int cmd_lambda(const Options& o) {
  auto g = io::read_edge_list_file(o.g_path);
  std::optional<ProductGraph> prod;
  if (!o.h_path.empty()) prod.emplace(g, io::read_edge_list_file(o.h_path));
  const Graph& target = prod ? prod->graph() : g;
  auto kind = parse_oracle(o.oracle);
  if (kind == OracleKind::Auto) kind = target.order() <= kBruteForceCap ? OracleKind::BruteForce : OracleKind::MinCutAlgorithm;
  auto r = kind == OracleKind::BruteForce ? brute_force_min_cut(target) : edge_connectivity(target);

  ordered_json j;
  j["lambda"] = r.lambda;
  if (r.witness) {
    j["black"] = members(r.witness->black);
    j["white"] = members(r.witness->white);
    j["cut_edges"] = edge_array(r.witness->edges);
  } else {
    j["black"] = nullptr;
    j["white"] = nullptr;
    j["cut_edges"] = nullptr;
  }
  emit(o.out_path, dump(j));
  return kOk;
}

int cmd_frustration(const Options& o) {
  auto g = io::read_edge_list_file(o.g_path);
  auto f = frustration(g);
  ordered_json j;
  j["phi"] = f.phi;
  j["max_cut"] = g.size() - f.phi;
  j["side"] = members(f.first);
  j["other"] = members(f.second);
  j["frustrated_edges"] = edge_array(f.frustrated_edges);
  emit(o.out_path, dump(j));
  return kOk;
}

int cmd_rho(const Options& o) {
  auto r = rho(io::read_edge_list_file(o.g_path));
  ordered_json j;
  j["rho"] = r.rho;
  j["a"] = members(r.a);
  j["b"] = members(r.b);
  j["a1"] = members(r.a1);
  j["a2"] = members(r.a2);
  emit(o.out_path, dump(j));
  return kOk;
}

int cmd_psi(const Options& o) {
  auto g = io::read_edge_list_file(o.g_path);
  auto h = io::read_edge_list_file(o.h_path);
  auto r = psi(g, h);
  auto rg = rho(g);
  auto fh = frustration(h);
  ordered_json j;
  j["psi"] = r.psi;
  j["rho_g"] = r.rho_g;
  j["phi_h"] = r.phi_h;
  j["edges_g"] = r.edges_g;
  j["edges_h"] = r.edges_h;
  j["rho_witness"] = {{"a1", members(rg.a1)}, {"a2", members(rg.a2)}, {"b", members(rg.b)}};
  j["phi_witness"] = {{"c", members(fh.first)}, {"d", members(fh.second)}};
  emit(o.out_path, dump(j));
  return kOk;
}

int cmd_formula(const Options& o) {
  ProductGraph p(io::read_edge_list_file(o.g_path), io::read_edge_list_file(o.h_path));
  auto b = lambda_product_formula(p);
  ordered_json j;
  j["terms"] = {{"type1", b.type1}, {"type2", b.type2}, {"delta", b.delta}, {"psi_gh", b.psi_gh}, {"psi_hg", b.psi_hg}};
  j["lambda"] = b.lambda;
  auto achieving = ordered_json::array();
  for (auto t : b.achieving) achieving.push_back(term_name(t));
  j["achieving"] = achieving;
  if (b.witness) {
    j["witness"] = {{"term", term_name(*b.witness_term)},
                    {"black", members(b.witness->black)},
                    {"cut_edges", edge_array(b.witness->edges)}};
  } else {
    j["witness"] = nullptr;
  }
  j["encoding"] = p.encoding_note();
  emit(o.out_path, dump(j));
  return kOk;
}

int cmd_classify(const Options& o) {
  ProductGraph p(io::read_edge_list_file(o.g_path), io::read_edge_list_file(o.h_path));
  const auto n = p.graph().order();
  if (!o.black.empty()) {
    VertexSet black(n);
    for (auto v : o.black) {
      if (v >= n) throw InputError("--black: vertex " + std::to_string(v) + " outside the product");
      black.insert(v);
    }
    auto cut = make_cut(p.graph(), black);
    ordered_json j = cut_json(cut);
    j["size"] = cut.size();
    j.update(types_json(classify_cut(p, cut)));
    emit(o.out_path, dump(j));
    return kOk;
  }
  auto r = check_structure_theorem(p);
  ordered_json j;
  j["lambda"] = r.lambda;
  j["exempt"] = r.exempt;
  j["unstructured"] = r.unstructured;
  j["low_type_exists"] = r.low_type_exists;
  auto cuts = ordered_json::array();
  for (const auto& c : r.cuts) {
    ordered_json e = cut_json(c.cut);
    e.update(types_json(c.types));
    cuts.push_back(e);
  }
  j["cuts"] = cuts;
  emit(o.out_path, dump(j));
  return r.violation() ? kVerifyFailed : kOk;
}

int cmd_verify(const Options& o) {
  std::vector<FactorPair> pairs;
  if (!o.g_path.empty() || !o.h_path.empty()) {
    if (o.g_path.empty() || o.h_path.empty()) throw InputError("verify: --g and --h go together");
    pairs.push_back({io::read_edge_list_file(o.g_path), io::read_edge_list_file(o.h_path)});
  } else {
    o.sweep.validate();
    pairs = sweep_instances(o.sweep);
  }
  const auto kind = parse_oracle(o.oracle);
  std::ostringstream csv;
  csv << "g_id,h_id,formula,oracle,equal\n";
  bool all = true;
  for (const auto& [g, h] : pairs) {
    auto r = verify_formula(g, h, kind);
    const auto gid = gen::graph_id(g), hid = gen::graph_id(h);
    std::cerr << (r.equal ? "PASS " : "FAIL ") << gid << " x " << hid << " formula=" << r.formula.lambda
              << " oracle=" << r.oracle_lambda << '\n';
    csv << gid << ',' << hid << ',' << r.formula.lambda << ',' << r.oracle_lambda << ',' << (r.equal ? "true" : "false")
        << '\n';
    all = all && r.equal;
  }
  emit(o.csv_path, csv.str());
  return all ? kOk : kVerifyFailed;
}

int cmd_sweep(const Options& o) {
  auto cfg = o.sweep;
  cfg.oracle = parse_oracle(o.oracle);
  cfg.check_structure = !o.no_structure;
  auto rows = run_sweep(cfg);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  emit(o.csv_path, csv.str());
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.failed() ? 1 : 0;
  std::cerr << rows.size() << " pairs, " << failed << " failed\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

int cmd_gen(const Options& o) {
  const auto& f = o.family;
  Graph g;
  std::string note;
  if (f == "path") g = gen::path(o.n);
  else if (f == "cycle") g = gen::cycle(o.n);
  else if (f == "complete") g = gen::complete(o.n);
  else if (f == "bipartite") g = gen::complete_bipartite(o.m, o.n);
  else if (f == "hypercube") g = gen::hypercube(o.d);
  else if (f == "petersen") g = gen::petersen();
  else {
    std::mt19937_64 rng(o.seed);
    g = o.connected ? gen::random_connected(o.n, o.p, rng) : gen::random_gnp(o.n, o.p, rng);
    std::ostringstream s;
    s << "random n=" << o.n << " p=" << o.p << " seed=" << o.seed << (o.connected ? " connected" : "");
    note = s.str();
  }
  emit(o.out_path, io::format_edge_list(g, note.empty() ? std::vector<std::string>{} : std::vector<std::string>{note}));
  return kOk;
}

void add_sweep_flags(CLI::App* sub, Options& o) {
  sub->add_option("--max-n", o.sweep.max_factor_vertices, "largest factor order")->capture_default_str();
  sub->add_option("--min-n", o.sweep.min_factor_vertices, "smallest factor order")->capture_default_str();
  sub->add_option("--random", o.sweep.random_pairs, "random pairs instead of exhaustive enumeration (0 = exhaustive)");
  sub->add_option("--p", o.sweep.edge_probability, "edge probability for random factors")->capture_default_str();
  sub->add_option("--seed", o.sweep.seed, "seed for random factors")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge connectivity of direct products of graphs"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto g_opt = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--g", o.g_path, "first factor (edge list)");
    if (required) opt->required();
  };
  auto h_opt = [&](CLI::App* s, bool required) {
    auto* opt = s->add_option("--h", o.h_path, "second factor (edge list)");
    if (required) opt->required();
  };
  auto out_opt = [&](CLI::App* s) { s->add_option("-o,--out", o.out_path, "output file (default stdout)"); };
  auto oracle_opt = [&](CLI::App* s) {
    s->add_option("--oracle", o.oracle, "minimum-cut oracle: auto, brute or mincut")
        ->check(CLI::IsMember(kOracleNames))
        ->capture_default_str();
  };

  std::map<CLI::App*, int (*)(const Options&)> handlers;

  auto* product = app.add_subcommand("product", "write G x H as an edge list");
  g_opt(product, true), h_opt(product, true), out_opt(product);
  handlers[product] = cmd_product;

  auto* lambda = app.add_subcommand("lambda", "edge connectivity of G, or of G x H with --h");
  g_opt(lambda, true), h_opt(lambda, false), out_opt(lambda), oracle_opt(lambda);
  handlers[lambda] = cmd_lambda;

  auto* frus = app.add_subcommand("frustration", "bipartite edge frustration of G");
  g_opt(frus, true), out_opt(frus);
  handlers[frus] = cmd_frustration;

  auto* rho_cmd = app.add_subcommand("rho", "rho(G) with its partition");
  g_opt(rho_cmd, true), out_opt(rho_cmd);
  handlers[rho_cmd] = cmd_rho;

  auto* psi_cmd = app.add_subcommand("psi", "psi(G, H)");
  g_opt(psi_cmd, true), h_opt(psi_cmd, true), out_opt(psi_cmd);
  handlers[psi_cmd] = cmd_psi;

  auto* formula = app.add_subcommand("formula", "closed-form lambda(G x H) with its terms and a witness");
  g_opt(formula, true), h_opt(formula, true), out_opt(formula);
  handlers[formula] = cmd_formula;

  auto* classify = app.add_subcommand("classify", "cut types of one partition, or of every minimum cut");
  g_opt(classify, true), h_opt(classify, true), out_opt(classify);
  classify->add_option("--black", o.black, "black side as product vertex ids, comma separated")->delimiter(',');
  handlers[classify] = cmd_classify;

  auto* verify = app.add_subcommand("verify", "formula against a minimum-cut oracle");
  g_opt(verify, false), h_opt(verify, false), oracle_opt(verify);
  verify->add_option("--csv", o.csv_path, "CSV output file (default stdout)");
  add_sweep_flags(verify, o);
  handlers[verify] = cmd_verify;

  auto* sweep = app.add_subcommand("sweep", "formula and structure checks over many factor pairs");
  add_sweep_flags(sweep, o);
  oracle_opt(sweep);
  sweep->add_option("--workers", o.sweep.workers, "worker threads")->capture_default_str();
  sweep->add_option("--csv", o.csv_path, "CSV output file (default stdout)");
  sweep->add_flag("--no-structure", o.no_structure, "skip the minimum-cut classification");
  handlers[sweep] = cmd_sweep;

  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen_cmd->add_option("family", o.family, "path, cycle, complete, bipartite, hypercube, petersen or random")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "bipartite", "hypercube", "petersen", "random"}));
  gen_cmd->add_option("--n", o.n, "order (second side for bipartite)");
  gen_cmd->add_option("--m", o.m, "first side for bipartite");
  gen_cmd->add_option("--d", o.d, "hypercube dimension");
  gen_cmd->add_option("--p", o.p, "edge probability")->capture_default_str();
  gen_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  gen_cmd->add_flag("--connected", o.connected, "resample until connected");
  out_opt(gen_cmd);
  handlers[gen_cmd] = cmd_gen;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    for (auto& [sub, run] : handlers)
      if (sub->parsed()) return run(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "dpcut: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "dpcut: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
