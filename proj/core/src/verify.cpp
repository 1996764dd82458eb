#include "chordal/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "chordal/chordal.hpp"
#include "chordal/clique_tree.hpp"
#include "chordal/contractibility.hpp"
#include "chordal/generators.hpp"
#include "chordal/graph_io.hpp"
#include "chordal/separators.hpp"

namespace chordal {

namespace {

constexpr int kMaxCounterexamplesPerCriterion = 10;

std::string hash_hex(const Graph& g) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(graph_hash(g)));
  return buf;
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

// The fixed Theorem-2 filter witness: maximal cliques {0,1,2}, {0,1,3},
// {0,4}; minimal separators {0} and {0,1} are nested.
Graph g_nest() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}});
}

struct Harness {
  const VerifyOptions& opt;
  std::ostream* log;
  VerifyResult res;

  Harness(const VerifyOptions& o, std::ostream* l) : opt(o), log(l) {
    res.criteria.reserve(16);  // begin() hands out references into this vector
  }

  CriterionResult& begin(const std::string& name, bool assertion = true) {
    res.criteria.push_back({name, assertion, true, 0, 0, ""});
    return res.criteria.back();
  }

  void finish(CriterionResult& c) {
    c.passed = c.failures == 0 && c.passed;
    if (log)
      *log << "criterion " << c.name << ": " << (c.passed ? "PASS" : "FAIL")
           << " (checked=" << c.checked << ", failures=" << c.failures << ")\n";
  }

  void fail(CriterionResult& c, const Graph& g, const std::string& detail) {
    ++c.failures;
    long long already = 0;
    for (const Counterexample& ce : res.counterexamples)
      if (ce.criterion == c.name) ++already;
    if (already < kMaxCounterexamplesPerCriterion)
      res.counterexamples.push_back({c.name, g.vertex_count(),
                                     serialize_graph(g, GraphFormat::edge_list),
                                     hash_hex(g), detail});
  }

  // --- criterion 1: kappa drop iff a minimum cut set holds both endpoints

  void check_cutset_equivalence(CriterionResult& c, const Graph& g) {
    MinCutFamily fam = minimum_cutsets(g, opt.max_oracle_n);
    ++c.checked;
    for (const Edge& e : g.edges()) {
      bool drop = !is_contractible_oracle(g, e, fam.kappa);
      bool in_cut = false;
      for (const VertexSet& t : fam.cutsets)
        if (set_contains(t, e.u) && set_contains(t, e.v)) {
          in_cut = true;
          break;
        }
      if (drop != in_cut) {
        fail(c, g,
             "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                 "}: kappa-drop=" + (drop ? "yes" : "no") +
                 " but min-cut-membership=" + (in_cut ? "yes" : "no"));
        return;
      }
    }
  }

  void criterion_cutset_equivalence() {
    CriterionResult& c = begin("cutset-equivalence");
    for (int n = 2; n <= opt.max_allgraph_n; ++n) {
      for_each_connected_graph(n, [&](const Graph& g) {
        if (!g.is_complete()) check_cutset_equivalence(c, g);
      });
    }
    SplitMix64 rng(opt.seed ^ 0x11ULL);
    int collected = 0;
    long long attempts = 0;
    while (collected < opt.cutset_samples && attempts < 100LL * opt.cutset_samples) {
      ++attempts;
      int n = 7 + static_cast<int>(rng.below(3));
      double density = 0.15 + 0.6 * rng.unit();
      Graph g = random_connected_graph(n, density, rng.next());
      if (g.is_complete()) continue;
      check_cutset_equivalence(c, g);
      ++collected;
    }
    if (collected < opt.cutset_samples) {
      c.passed = false;
      c.detail = "sample quota not met";
    }
    finish(c);
  }

  // --- criteria 2 and 5 share the connected chordal population

  void check_separators_and_tree_connectivity(CriterionResult& c2, CriterionResult& c5,
                                   const Graph& g) {
    CliqueTree t = build_clique_tree(g);
    std::vector<VertexSet> mprime = t.edges.empty() ? std::vector<VertexSet>{}
                                                    : edge_labels(t);
    std::vector<VertexSet> distinct = mprime;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<VertexSet> oracle = brute_force_minimal_separators(g, opt.max_oracle_n);
    ++c2.checked;
    if (distinct != oracle) {
      fail(c2, g, "distinct(M') has " + std::to_string(distinct.size()) +
                      " members, oracle has " + std::to_string(oracle.size()));
    }

    ++c5.checked;
    if (!tree_connected_check(t)) {
      fail(c5, g, "clique tree of a connected graph failed the intersection check");
      return;
    }
    for (const VertexSet& s : oracle) {
      RelabeledTree ts = tree_minus_separator(t, s);
      bool check_false = !tree_connected_check(ts);
      bool disconnected =
          connected_components(induced_delete(g, s).graph).size() >= 2;
      if (!check_false || !disconnected) {
        fail(c5, g, "separator " + set_to_string(s) + ": T\\S check " +
                        (check_false ? "false" : "true") + ", G-S " +
                        (disconnected ? "disconnected" : "connected"));
        return;
      }
    }
  }

  void criteria_separators_tree_connectivity() {
    CriterionResult& c2 = begin("separator-labels-match-oracle");
    CriterionResult& c5 = begin("tree-connectivity-check");
    for (int n = 1; n <= opt.max_chordal_n; ++n)
      for_each_connected_chordal(
          n, [&](const Graph& g) { check_separators_and_tree_connectivity(c2, c5, g); });

    SplitMix64 rng(opt.seed ^ 0x22ULL);
    for (int i = 0; i < opt.ktree_samples; ++i) {
      Graph g;
      if (i % 2 == 0) {
        int k = 2 + static_cast<int>(rng.below(3));
        int n = k + 2 + static_cast<int>(rng.below(opt.max_random_n - k - 1));
        g = random_ktree(n, k, rng.next());
      } else {
        int n = 1 + static_cast<int>(rng.below(opt.max_random_n));
        double density = rng.unit();
        g = random_chordal(n, density, rng.next());
      }
      check_separators_and_tree_connectivity(c2, c5, g);
    }
    finish(c2);
    finish(c5);
  }

  // --- criterion 3: the fixed M'' filter witness

  void criterion_m2_witness() {
    CriterionResult& c = begin("minimality-filter-witness");
    Graph g = g_nest();
    CliqueTree t = build_clique_tree(g);
    SeparatorComparison cmp = compare_separator_sources(g, t, opt.max_oracle_n);
    ++c.checked;
    bool detected = cmp.m_prime_matches_oracle && cmp.extra_in_m2.empty() &&
                    cmp.missing_from_m2 == std::vector<VertexSet>{{0, 1}};
    if (!detected) fail(c, g, "nested-separator discrepancy not detected as specified");
    std::string note =
        "witness graph (hash " + hash_hex(g) + "): M'' = {{0}} misses minimal separator "
        "{0,1} contained in M'; distinct(M') equals the oracle set. The minimality "
        "filter drops nested separators; the observation is reported, not asserted.";
    res.observations.push_back({"m2-filter-vs-oracle", note});
    finish(c);
  }

  // --- criteria 4 and 6 share the population; alt reading is observed

  long long alt_reading_divergences = 0;
  long long alt_reading_edges = 0;

  void check_classifier(CriterionResult& c4, CriterionResult& c6, const Graph& g) {
    FullReportOptions fopts;
    fopts.max_oracle_n = opt.max_oracle_n;
    fopts.max_split_n = 0;  // split corollary handled by its own criterion
    ContractibilityReport rep = full_report(g, fopts);
    ++c4.checked;
    if (!rep.theorem_evaluated || !rep.oracle_evaluated) {
      fail(c4, g, "population graph did not get both verdicts");
      return;
    }
    if (!rep.discrepancies.empty()) {
      const Edge& e = rep.discrepancies.front();
      fail(c4, g, "theorem and oracle disagree on edge {" + std::to_string(e.u) +
                      "," + std::to_string(e.v) + "}");
    }

    ++c6.checked;
    if (!check_simplicial_corollary(g, rep))
      fail(c6, g, "edge at a simplicial vertex is not oracle-contractible");
    else if (!check_2k_bound(g, rep))
      fail(c6, g, "contractible_count " + std::to_string(rep.contractible_count) +
                      " < 2*kappa = " + std::to_string(2 * rep.kappa));

    // Open question: quantifying condition (ii) over all tree edges instead
    // of covering ones.  Tallied and reported, never asserted.
    CliqueTree t = build_clique_tree(g);
    for (const EdgeVerdict& v : rep.verdicts) {
      EdgeVerdict alt = classify_edge_theorem(g, t, v.edge, rep.kappa,
                                              TheoremReading::all_tree_edges);
      ++alt_reading_edges;
      if (*alt.theorem_contractible != *v.oracle_contractible)
        ++alt_reading_divergences;
    }
  }

  void criteria_classifier_corollaries() {
    CriterionResult& c4 = begin("classifier-matches-oracle");
    CriterionResult& c6 = begin("simplicial-and-2k-corollaries");
    for (int n = 3; n <= opt.max_chordal_n; ++n)
      for_each_connected_chordal(n, [&](const Graph& g) {
        // kappa >= 1 holds for every connected graph on >= 2 vertices;
        // n >= kappa+2 excludes exactly the complete graphs.
        if (!g.is_complete()) check_classifier(c4, c6, g);
      });

    SplitMix64 rng(opt.seed ^ 0x44ULL);
    for (int i = 0; i < opt.ktree_samples; ++i) {
      int k = 2 + static_cast<int>(rng.below(3));
      int n = k + 2 + static_cast<int>(rng.below(opt.max_random_n - k - 1));
      Graph g = random_ktree(n, k, rng.next());
      check_classifier(c4, c6, g);
    }

    std::ostringstream os;
    os << "condition (ii) quantified over all tree edges instead of covering ones "
          "disagrees with the oracle on "
       << alt_reading_divergences << " of " << alt_reading_edges
       << " edges; the covering reading disagrees on " << c4.failures << ".";
    res.observations.push_back({"all-tree-edges-reading", os.str()});
    finish(c4);
    finish(c6);
  }

  // --- criterion 7: complete graphs

  void criterion_complete_graphs() {
    CriterionResult& c = begin("complete-graphs-non-contractible");
    for (int n = 3; n <= 8; ++n) {
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
      ContractibilityReport rep = full_report(g);
      ++c.checked;
      if (rep.contractible_count != 0)
        fail(c, g, "K_" + std::to_string(n) + " has contractible_count " +
                       std::to_string(rep.contractible_count));
    }
    finish(c);
  }

  // --- criterion 8: split graphs

  void criterion_split() {
    CriterionResult& c = begin("split-cross-edges-contractible");
    SplitMix64 rng(opt.seed ^ 0x88ULL);
    int collected = 0;
    long long attempts = 0;
    long long regular_seen = 0, regular_critical = 0, regular_hypothesis = 0;
    while (collected < opt.split_samples && attempts < 200LL * opt.split_samples) {
      ++attempts;
      int n_clique = 2 + static_cast<int>(rng.below(5));
      int n_stable = 1 + static_cast<int>(rng.below(6));
      double p = 0.25 + 0.65 * rng.unit();
      Graph g = random_split(n_clique, n_stable, p, rng.next(), true);
      if (!is_connected(g)) continue;

      FullReportOptions fopts;
      fopts.max_oracle_n = opt.max_oracle_n;
      ContractibilityReport rep = full_report(g, fopts);
      if (!rep.corollaries.split) continue;
      const SplitReport& sr = *rep.corollaries.split;
      if (sr.regular) {
        // report-only: the paper predicts contraction criticality here
        ++regular_seen;
        if (sr.hypothesis_met) ++regular_hypothesis;
        if (sr.contraction_critical) ++regular_critical;
        continue;
      }
      ++collected;
      ++c.checked;
      if (!sr.hypothesis_met) {
        fail(c, g, "non-regular split graph with |V| < kappa+2 (unexpected)");
        continue;
      }
      if (!sr.cross_edges_contractible)
        fail(c, g, "a clique-stable edge is not oracle-contractible");
    }
    if (collected < opt.split_samples) {
      c.passed = false;
      c.detail = "sample quota not met";
    }
    std::ostringstream os;
    os << "regular split graphs in the sample: " << regular_seen << " ("
       << regular_hypothesis << " with |V| >= kappa+2, " << regular_critical
       << " contraction critical). Connected regular split graphs are complete, "
          "so the |V| >= kappa+2 hypothesis never held; the criticality claim is "
          "recorded per graph, not asserted.";
    res.observations.push_back({"regular-split-criticality", os.str()});
    finish(c);
  }
};

}  // namespace

VerifyResult run_verify(const VerifyOptions& opts, std::ostream* log) {
  if (opts.max_chordal_n > 7 || opts.max_allgraph_n > 7)
    throw ResourceError("exhaustive bounds are limited to n <= 7");
  if (opts.max_random_n < 6 || opts.max_random_n > opts.max_oracle_n)
    throw DomainError("max_random_n must lie in [6, max_oracle_n]");
  Harness h(opts, log);
  h.criterion_cutset_equivalence();
  h.criteria_separators_tree_connectivity();
  h.criterion_m2_witness();
  h.criteria_classifier_corollaries();
  h.criterion_complete_graphs();
  h.criterion_split();

  // keep the report in criterion order 1..8
  auto& cr = h.res.criteria;
  auto order = [](const std::string& name) {
    const char* names[] = {"cutset-equivalence",
                           "separator-labels-match-oracle",
                           "minimality-filter-witness",
                           "classifier-matches-oracle",
                           "tree-connectivity-check",
                           "simplicial-and-2k-corollaries",
                           "complete-graphs-non-contractible",
                           "split-cross-edges-contractible"};
    for (int i = 0; i < 8; ++i)
      if (name == names[i]) return i;
    return 99;
  };
  std::stable_sort(cr.begin(), cr.end(),
                   [&](const CriterionResult& a, const CriterionResult& b) {
                     return order(a.name) < order(b.name);
                   });
  return h.res;
}

std::string verify_report_json(const VerifyResult& result, const VerifyOptions& opts,
                               int indent) {
  nlohmann::json j;
  j["bounds"] = {{"max_chordal_n", opts.max_chordal_n},
                 {"max_allgraph_n", opts.max_allgraph_n},
                 {"cutset_samples", opts.cutset_samples},
                 {"ktree_samples", opts.ktree_samples},
                 {"split_samples", opts.split_samples},
                 {"max_random_n", opts.max_random_n},
                 {"max_oracle_n", opts.max_oracle_n},
                 {"seed", opts.seed}};
  j["criteria"] = nlohmann::json::array();
  for (const CriterionResult& c : result.criteria)
    j["criteria"].push_back({{"name", c.name},
                             {"assertion", c.assertion},
                             {"passed", c.passed},
                             {"checked", c.checked},
                             {"failures", c.failures},
                             {"detail", c.detail}});
  j["observations"] = nlohmann::json::array();
  for (const Observation& o : result.observations)
    j["observations"].push_back({{"name", o.name}, {"detail", o.detail}});
  j["counterexamples"] = nlohmann::json::array();
  for (const Counterexample& ce : result.counterexamples)
    j["counterexamples"].push_back({{"criterion", ce.criterion},
                                    {"n", ce.n},
                                    {"edges", ce.edges},
                                    {"hash", ce.hash},
                                    {"detail", ce.detail}});
  j["ok"] = result.ok();
  return j.dump(indent);
}

std::string verify_report_text(const VerifyResult& result) {
  std::ostringstream os;
  for (const CriterionResult& c : result.criteria) {
    os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  checked=" << c.checked
       << " failures=" << c.failures;
    if (!c.assertion) os << "  [report-only]";
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  for (const Observation& o : result.observations)
    os << "NOTE  " << o.name << ": " << o.detail << "\n";
  for (const Counterexample& ce : result.counterexamples) {
    os << "COUNTEREXAMPLE  " << ce.criterion << "  n=" << ce.n << " hash=" << ce.hash
       << "  " << ce.detail << "\n";
    std::istringstream lines(ce.edges);
    std::string line;
    while (std::getline(lines, line)) os << "    " << line << "\n";
  }
  os << (result.ok() ? "verify: all assertion criteria passed"
                     : "verify: ASSERTION CRITERIA FAILED")
     << "\n";
  return os.str();
}

}  // namespace chordal
