#include "chordal/contractibility.hpp"

#include <algorithm>

#include "json.hpp"

namespace chordal {

bool is_contractible_oracle(const Graph& g, Edge e, int kappa) {
  ContractionResult c = contract_edge(g, e);
  return vertex_connectivity(c.graph) >= kappa;
}

bool is_contractible_oracle(const Graph& g, Edge e) {
  return is_contractible_oracle(g, e, vertex_connectivity(g));
}

bool non_contractible_via_cutsets(const Graph& g, Edge e, int max_n) {
  if (!g.has_edge(e.u, e.v)) throw InvalidEdgeError("edge not present in graph");
  if (g.is_complete()) return false;  // gamma_G empty by convention
  MinCutFamily fam = minimum_cutsets(g, max_n);
  for (const VertexSet& t : fam.cutsets)
    if (set_contains(t, e.u) && set_contains(t, e.v)) return true;
  return false;
}

std::vector<VertexSet> covering_tree_edges(const CliqueTree& t, Edge e) {
  bool covered = false;
  for (const VertexSet& l : t.labels)
    if (set_contains(l, e.u) && set_contains(l, e.v)) {
      covered = true;
      break;
    }
  if (!covered) throw InconsistencyError("edge not covered by any clique tree label");

  std::vector<VertexSet> out;
  for (auto [i, j] : t.edges) {
    VertexSet s = set_intersect(t.labels[i], t.labels[j]);
    if (set_contains(s, e.u) && set_contains(s, e.v)) out.push_back(std::move(s));
  }
  return out;
}

EdgeVerdict classify_edge_theorem(const Graph& g, const CliqueTree& t, Edge e, int kappa,
                                  TheoremReading reading) {
  if (g.vertex_count() < kappa + 2)
    throw DomainError("theorem requires |V| >= k+2");

  EdgeVerdict v;
  v.edge = e;
  std::vector<VertexSet> covering = covering_tree_edges(t, e);
  if (covering.empty()) {
    v.theorem_contractible = true;
    v.reason = TheoremReason::unique_maximal_clique;
    return v;
  }
  bool all_exceed;
  if (reading == TheoremReading::covering_labels) {
    all_exceed = std::all_of(covering.begin(), covering.end(), [&](const VertexSet& s) {
      return static_cast<int>(s.size()) > kappa;
    });
  } else {
    all_exceed = true;
    for (auto [i, j] : t.edges)
      if (static_cast<int>(set_intersect(t.labels[i], t.labels[j]).size()) <= kappa) {
        all_exceed = false;
        break;
      }
  }
  v.theorem_contractible = all_exceed;
  v.reason = all_exceed ? TheoremReason::covering_labels_exceed_k
                        : TheoremReason::covering_separator_at_k;
  return v;
}

std::optional<SplitPartition> split_partition(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n || n > 25) throw ResourceError("graph too large for split partition search");

  // All 2^n candidate clique parts; prefer the largest, then lexicographically
  // smallest vertex set.
  std::optional<SplitPartition> best;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    VertexSet k, i;
    for (int v = 0; v < n; ++v)
      ((mask >> v) & 1 ? k : i).push_back(v);
    bool ok = true;
    for (size_t a = 0; a < k.size() && ok; ++a)
      for (size_t b = a + 1; b < k.size() && ok; ++b)
        if (!g.has_edge(k[a], k[b])) ok = false;
    for (size_t a = 0; a < i.size() && ok; ++a)
      for (size_t b = a + 1; b < i.size() && ok; ++b)
        if (g.has_edge(i[a], i[b])) ok = false;
    if (!ok) continue;
    if (!best || k.size() > best->clique_part.size() ||
        (k.size() == best->clique_part.size() && k < best->clique_part))
      best = SplitPartition{std::move(k), std::move(i)};
  }
  return best;
}

namespace {

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != g.degree(0)) return false;
  return true;
}

}  // namespace

ContractibilityReport full_report(const Graph& g, const FullReportOptions& opts) {
  if (!is_connected(g)) throw DomainError("full report requires a connected graph");

  ContractibilityReport rep;
  rep.n = g.vertex_count();
  rep.m = g.edge_count();
  rep.kappa = vertex_connectivity(g);

  CliqueTree t = build_clique_tree(g);  // rejects non-chordal input

  const bool want_theorem = opts.method != VerdictMethod::oracle;
  const bool want_oracle = opts.method != VerdictMethod::theorem;
  rep.theorem_evaluated = want_theorem && rep.n >= rep.kappa + 2;
  rep.oracle_evaluated = want_oracle && rep.n <= opts.max_oracle_n;

  for (const Edge& e : g.edges()) {
    EdgeVerdict v;
    v.edge = e;
    if (rep.theorem_evaluated) v = classify_edge_theorem(g, t, e, rep.kappa);
    if (rep.oracle_evaluated)
      v.oracle_contractible = is_contractible_oracle(g, e, rep.kappa);
    if (v.agree().has_value() && !*v.agree()) rep.discrepancies.push_back(e);
    rep.verdicts.push_back(std::move(v));
  }

  for (const EdgeVerdict& v : rep.verdicts) {
    const auto& side = rep.oracle_evaluated ? v.oracle_contractible : v.theorem_contractible;
    if (side && *side) ++rep.contractible_count;
  }

  if (rep.theorem_evaluated && rep.oracle_evaluated) {
    rep.corollaries.simplicial = check_simplicial_corollary(g, rep);
    rep.corollaries.two_k_bound = check_2k_bound(g, rep);
  }
  if (rep.n <= opts.max_split_n) {
    if (auto p = split_partition(g, opts.max_split_n); p && rep.oracle_evaluated)
      rep.corollaries.split = split_contractibility_report(g, *p, rep);
  }
  return rep;
}

bool check_simplicial_corollary(const Graph& g, const ContractibilityReport& report) {
  std::vector<char> simp(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) simp[v] = is_simplicial(g, v);
  for (const EdgeVerdict& v : report.verdicts) {
    if (!simp[v.edge.u] && !simp[v.edge.v]) continue;
    if (!v.oracle_contractible || !*v.oracle_contractible) return false;
  }
  return true;
}

bool check_2k_bound(const Graph&, const ContractibilityReport& report) {
  return report.contractible_count >= 2 * report.kappa;
}

SplitReport split_contractibility_report(const Graph& g, const SplitPartition& p,
                                         const ContractibilityReport& report) {
  SplitReport out;
  out.partition = p;
  out.hypothesis_met = report.n >= report.kappa + 2;
  out.regular = is_regular(g);

  out.cross_edges_contractible = true;
  out.contraction_critical = true;
  for (const EdgeVerdict& v : report.verdicts) {
    bool oracle_yes = v.oracle_contractible && *v.oracle_contractible;
    if (oracle_yes) out.contraction_critical = false;
    bool cross = set_contains(p.clique_part, v.edge.u) != set_contains(p.clique_part, v.edge.v);
    if (cross && !oracle_yes) out.cross_edges_contractible = false;
  }

  out.predicted_critical = out.regular && out.hypothesis_met;
  if (out.predicted_critical)
    out.prediction_agrees = out.contraction_critical;
  return out;
}

const char* reason_name(TheoremReason r) {
  switch (r) {
    case TheoremReason::unique_maximal_clique:
      return "unique-maximal-clique";
    case TheoremReason::covering_labels_exceed_k:
      return "all-covering-separators-exceed-k";
    case TheoremReason::covering_separator_at_k:
      return "covering-separator-of-size-k";
  }
  return "?";
}

namespace {

nlohmann::json verdict_str(const std::optional<bool>& v) {
  if (!v) return nullptr;
  return *v ? "contractible" : "non-contractible";
}

}  // namespace

std::string report_to_json(const ContractibilityReport& report, int indent) {
  nlohmann::json j;
  j["kappa"] = report.kappa;
  j["n"] = report.n;
  j["m"] = report.m;
  j["edges"] = nlohmann::json::array();
  for (const EdgeVerdict& v : report.verdicts) {
    nlohmann::json e;
    e["u"] = v.edge.u;
    e["v"] = v.edge.v;
    e["theorem"] = verdict_str(v.theorem_contractible);
    e["reason"] = v.reason ? nlohmann::json(reason_name(*v.reason)) : nullptr;
    e["oracle"] = verdict_str(v.oracle_contractible);
    e["agree"] = v.agree() ? nlohmann::json(*v.agree()) : nullptr;
    j["edges"].push_back(std::move(e));
  }
  j["contractible_count"] = report.contractible_count;
  j["discrepancies"] = nlohmann::json::array();
  for (const Edge& e : report.discrepancies)
    j["discrepancies"].push_back({{"u", e.u}, {"v", e.v}});
  nlohmann::json cor;
  cor["simplicial"] =
      report.corollaries.simplicial ? nlohmann::json(*report.corollaries.simplicial) : nullptr;
  cor["two_k_bound"] =
      report.corollaries.two_k_bound ? nlohmann::json(*report.corollaries.two_k_bound) : nullptr;
  if (report.corollaries.split) {
    const SplitReport& s = *report.corollaries.split;
    nlohmann::json sj;
    sj["clique_part"] = s.partition.clique_part;
    sj["stable_part"] = s.partition.stable_part;
    sj["hypothesis_met"] = s.hypothesis_met;
    sj["cross_edges_contractible"] = s.cross_edges_contractible;
    sj["regular"] = s.regular;
    sj["contraction_critical"] = s.contraction_critical;
    sj["predicted_critical"] = s.predicted_critical;
    sj["prediction_agrees"] =
        s.prediction_agrees ? nlohmann::json(*s.prediction_agrees) : nullptr;
    cor["split"] = std::move(sj);
  } else {
    cor["split"] = nullptr;
  }
  j["corollaries"] = std::move(cor);
  return j.dump(indent);
}

}  // namespace chordal
