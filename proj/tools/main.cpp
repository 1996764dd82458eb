#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "chordal/chordal.hpp"
#include "chordal/clique_tree.hpp"
#include "chordal/contractibility.hpp"
#include "chordal/generators.hpp"
#include "chordal/graph_io.hpp"
#include "chordal/separators.hpp"
#include "chordal/verify.hpp"

namespace {

using namespace chordal;

// exit codes: 0 ok, 1 property violation in verify, 2 usage/parse/domain
// error, 3 resource bound exceeded
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

GraphFormat parse_format(const std::string& s) {
  if (s == "edgelist") return GraphFormat::edge_list;
  if (s == "dimacs") return GraphFormat::dimacs;
  throw ParseError("unknown format: " + s);
}

Graph load_graph(const std::string& path, const std::string& format) {
  GraphFormat fmt = parse_format(format);
  if (path == "-") return parse_graph(std::cin, fmt);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  return parse_graph(in, fmt);
}

std::string set_to_string(const VertexSet& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << "}";
  return os.str();
}

int run_check_chordal(const Graph& g, const std::string& output) {
  ChordalityResult res = check_chordal(g);
  if (output == "json") {
    nlohmann::json j;
    j["chordal"] = res.chordal;
    if (res.chordal) {
      j["peo"] = res.peo;
    } else {
      j["violating_vertex"] = res.violating_vertex;
      j["chordless_cycle"] = res.chordless_cycle;
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  if (res.chordal) {
    std::cout << "chordal\nperfect elimination order:";
    for (int v : res.peo) std::cout << " " << v;
    std::cout << "\n";
  } else {
    std::cout << "non-chordal\nchordless cycle:";
    for (int v : res.chordless_cycle) std::cout << " " << v;
    std::cout << "\n";
  }
  return kExitOk;
}

// Clique tree per connected component, labels shown in the input id space.
int run_clique_tree(const Graph& g, const std::string& output) {
  std::vector<VertexSet> comps = connected_components(g);
  struct CompTree {
    VertexSet vertices;
    CliqueTree tree;  // labels remapped to original ids
  };
  std::vector<CompTree> trees;
  for (const VertexSet& comp : comps) {
    VertexSet others;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!set_contains(comp, v)) others.push_back(v);
    Graph sub = induced_delete(g, others).graph;
    CliqueTree t = build_clique_tree(sub);
    for (VertexSet& label : t.labels)
      for (int& v : label) v = comp[v];  // local ids are compaction order
    t.vertex_count = g.vertex_count();
    trees.push_back({comp, std::move(t)});
  }

  if (output == "json") {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["components"] = nlohmann::json::array();
    for (const CompTree& ct : trees) {
      nlohmann::json c;
      c["nodes"] = ct.tree.labels;
      c["edges"] = nlohmann::json::array();
      c["edge_labels"] = nlohmann::json::array();
      for (auto [i, k] : ct.tree.edges) {
        c["edges"].push_back({i, k});
        c["edge_labels"].push_back(set_intersect(ct.tree.labels[i], ct.tree.labels[k]));
      }
      j["components"].push_back(std::move(c));
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  if (trees.size() == 1) {
    std::cout << to_dot(trees[0].tree);
    return kExitOk;
  }
  std::cout << "graph clique_forest {\n  node [shape=box];\n";
  for (size_t ci = 0; ci < trees.size(); ++ci) {
    const CliqueTree& t = trees[ci].tree;
    for (int i = 0; i < t.node_count(); ++i)
      std::cout << "  c" << ci << "_" << i << " [label=\"" << set_to_string(t.labels[i])
                << "\"];\n";
    for (auto [i, k] : t.edges)
      std::cout << "  c" << ci << "_" << i << " -- c" << ci << "_" << k << " [label=\""
                << set_to_string(set_intersect(t.labels[i], t.labels[k])) << "\"];\n";
  }
  std::cout << "}\n";
  return kExitOk;
}

int run_separators(const Graph& g, const std::string& output, int max_oracle_n) {
  CliqueTree t = build_clique_tree(g);
  SeparatorComparison cmp = compare_separator_sources(g, t, max_oracle_n);
  if (output == "json") {
    std::cout << comparison_to_json(g, cmp) << "\n";
    return kExitOk;
  }
  std::cout << "kappa = " << cmp.kappa << "\nM' (tree-edge labels):";
  for (const VertexSet& s : cmp.family.m_prime) std::cout << " " << set_to_string(s);
  std::cout << "\nM'' (minimality filter):";
  for (const VertexSet& s : cmp.family.m_double_prime) std::cout << " " << set_to_string(s);
  std::cout << "\noracle minimal separators:";
  for (const VertexSet& s : cmp.family.oracle_minimal_separators)
    std::cout << " " << set_to_string(s);
  std::cout << "\ndistinct(M') equals oracle: " << (cmp.m_prime_matches_oracle ? "yes" : "no")
            << "\n";
  if (!cmp.missing_from_m2.empty()) {
    std::cout << "oracle separators missing from M'':";
    for (const VertexSet& s : cmp.missing_from_m2) std::cout << " " << set_to_string(s);
    std::cout << "\n";
  }
  if (!cmp.extra_in_m2.empty()) {
    std::cout << "M'' members outside the oracle:";
    for (const VertexSet& s : cmp.extra_in_m2) std::cout << " " << set_to_string(s);
    std::cout << "\n";
  }
  return kExitOk;
}

int run_connectivity(const Graph& g, const std::string& output, int max_oracle_n) {
  int kappa = vertex_connectivity(g);
  bool within = g.vertex_count() <= max_oracle_n;
  MinCutFamily fam;
  if (within) fam = minimum_cutsets(g, max_oracle_n);
  if (output == "json") {
    nlohmann::json j;
    j["kappa"] = kappa;
    j["cutsets"] = within ? nlohmann::json(fam.cutsets) : nlohmann::json(nullptr);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "kappa = " << kappa << "\n";
  if (within) {
    std::cout << "minimum cut sets (" << fam.cutsets.size() << "):";
    for (const VertexSet& s : fam.cutsets) std::cout << " " << set_to_string(s);
    std::cout << "\n";
  } else {
    std::cout << "minimum cut sets: skipped (vertex count above oracle bound)\n";
  }
  return kExitOk;
}

int run_contractible(const Graph& g, const std::string& output, int max_oracle_n,
                     const std::string& method) {
  FullReportOptions opts;
  opts.max_oracle_n = max_oracle_n;
  if (method == "theorem")
    opts.method = VerdictMethod::theorem;
  else if (method == "oracle")
    opts.method = VerdictMethod::oracle;
  else
    opts.method = VerdictMethod::both;
  ContractibilityReport rep = full_report(g, opts);
  if (output == "text") {
    std::cout << "kappa = " << rep.kappa << ", contractible edges: " << rep.contractible_count
              << " of " << rep.m << "\n";
    for (const EdgeVerdict& v : rep.verdicts) {
      std::cout << "{" << v.edge.u << "," << v.edge.v << "}";
      if (v.theorem_contractible)
        std::cout << " theorem=" << (*v.theorem_contractible ? "contractible" : "non-contractible")
                  << " (" << reason_name(*v.reason) << ")";
      if (v.oracle_contractible)
        std::cout << " oracle=" << (*v.oracle_contractible ? "contractible" : "non-contractible");
      if (v.agree() && !*v.agree()) std::cout << "  <-- DISAGREE";
      std::cout << "\n";
    }
    return kExitOk;
  }
  std::cout << report_to_json(rep) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure of contractible edges in k-connected chordal graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "edgelist";
  std::string output = "text";
  std::uint64_t seed = 42;
  int samples = 1000;
  int max_n = 7;
  int max_oracle_n = 16;
  std::string method = "both";

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input graph file, or - for stdin");
    cmd->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
  };

  CLI::App* cc = app.add_subcommand("check-chordal", "chordality with PEO or chordless-cycle witness");
  add_input(cc);
  cc->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));

  CLI::App* ct = app.add_subcommand("clique-tree", "clique tree as DOT or JSON (per component)");
  add_input(ct);
  ct->add_option("--output", output)->check(CLI::IsMember({"dot", "json"}));

  CLI::App* sep = app.add_subcommand("separators", "tree-edge labels vs the enumeration oracle");
  add_input(sep);
  sep->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));
  sep->add_option("--max-oracle-n", max_oracle_n, "enumeration bound");

  CLI::App* conn = app.add_subcommand("connectivity", "kappa and the minimum cut sets");
  add_input(conn);
  conn->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));
  conn->add_option("--max-oracle-n", max_oracle_n, "enumeration bound");

  CLI::App* con = app.add_subcommand("contractible", "per-edge contractibility report");
  add_input(con);
  con->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));
  con->add_option("--max-oracle-n", max_oracle_n, "oracle bound for kappa recomputation");
  con->add_option("--method", method, "verdict sources")
      ->check(CLI::IsMember({"theorem", "oracle", "both"}));

  CLI::App* gen = app.add_subcommand("gen", "emit a generated graph");
  std::string family = "chordal";
  int gen_n = 8;
  int gen_k = 2;
  double density = 0.5;
  bool drop_isolated = false;
  gen->add_option("--family", family)
      ->check(CLI::IsMember({"chordal", "ktree", "split", "all-graphs"}));
  gen->add_option("--n", gen_n, "vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--k", gen_k, "k-tree width / split clique size");
  gen->add_option("--density", density, "edge density or cross-edge probability");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  gen->add_flag("--drop-isolated", drop_isolated, "remove isolated stable vertices (split)");

  CLI::App* ver = app.add_subcommand("verify", "run the property suite over enumerated and seeded populations");
  ver->add_option("--output", output)->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--seed", seed, "master seed");
  ver->add_option("--samples", samples, "base sample count (cut-set check uses 2x, split x/2)")
      ->check(CLI::PositiveNumber);
  ver->add_option("--max-n", max_n, "exhaustive enumeration bound (<= 7)")
      ->check(CLI::Range(1, 7));
  ver->add_option("--max-oracle-n", max_oracle_n, "enumeration-oracle bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cc->parsed()) return run_check_chordal(load_graph(input, format), output);
    if (ct->parsed()) {
      if (output == "text") output = "dot";
      return run_clique_tree(load_graph(input, format), output);
    }
    if (sep->parsed()) return run_separators(load_graph(input, format), output, max_oracle_n);
    if (conn->parsed()) return run_connectivity(load_graph(input, format), output, max_oracle_n);
    if (con->parsed()) {
      if (!con->count("--output")) output = "json";
      return run_contractible(load_graph(input, format), output, max_oracle_n, method);
    }
    if (gen->parsed()) {
      GenSpec spec;
      if (family == "chordal") spec.family = GenFamily::chordal;
      if (family == "ktree") spec.family = GenFamily::ktree;
      if (family == "split") spec.family = GenFamily::split;
      if (family == "all-graphs") spec.family = GenFamily::all_graphs;
      spec.n = gen_n;
      spec.k = gen_k;
      spec.density = density;
      spec.seed = seed;
      Graph g = spec.family == GenFamily::split
                    ? random_split(spec.k, spec.n - spec.k, spec.density, spec.seed,
                                   drop_isolated)
                    : generate(spec);
      if (format == "dimacs") {
        std::cout << "c" << genspec_comment(spec).substr(1) << "\n"
                  << serialize_graph(g, GraphFormat::dimacs);
      } else {
        std::cout << genspec_comment(spec) << "\n"
                  << serialize_graph(g, GraphFormat::edge_list);
      }
      return kExitOk;
    }
    if (ver->parsed()) {
      VerifyOptions opts;
      opts.seed = seed;
      opts.cutset_samples = 2 * samples;
      opts.ktree_samples = samples;
      opts.split_samples = samples / 2;
      opts.max_chordal_n = max_n;
      opts.max_allgraph_n = std::min(max_n, 6);
      opts.max_oracle_n = max_oracle_n;
      VerifyResult result = run_verify(opts, &std::cerr);
      if (output == "json")
        std::cout << verify_report_json(result, opts) << "\n";
      else
        std::cout << verify_report_text(result);
      return result.ok() ? kExitOk : kExitViolation;
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
