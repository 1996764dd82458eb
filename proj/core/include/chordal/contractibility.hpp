#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordal/clique_tree.hpp"
#include "chordal/graph.hpp"
#include "chordal/separators.hpp"

namespace chordal {

enum class TheoremReason {
  unique_maximal_clique,        // no tree-edge label covers the edge
  covering_labels_exceed_k,     // every covering label has size > k
  covering_separator_at_k,      // some covering label has size <= k
};

// Which tree-edge labels condition (ii) quantifies over.  The covering
// reading is the one used for classification; the all-edges reading exists
// so the harness can report where it diverges from the oracle.
enum class TheoremReading { covering_labels, all_tree_edges };

struct EdgeVerdict {
  Edge edge{0, 1};
  std::optional<bool> theorem_contractible;
  std::optional<TheoremReason> reason;
  std::optional<bool> oracle_contractible;

  std::optional<bool> agree() const {
    if (!theorem_contractible || !oracle_contractible) return std::nullopt;
    return *theorem_contractible == *oracle_contractible;
  }
};

// Ground truth: kappa(G.e) >= kappa(G).
bool is_contractible_oracle(const Graph& g, Edge e);
bool is_contractible_oracle(const Graph& g, Edge e, int kappa);

// Some member of gamma_G contains both endpoints.  Complete graphs return
// false by convention (gamma_G is empty; callers use the kappa-drop oracle).
bool non_contractible_via_cutsets(const Graph& g, Edge e, int max_n = 16);

// All tree-edge labels containing both endpoints; empty iff the edge lies
// in a unique maximal clique.  Throws InconsistencyError if no node label
// covers the edge.
std::vector<VertexSet> covering_tree_edges(const CliqueTree& t, Edge e);

// Theorem-based classification for a k-connected chordal graph with
// |V| >= k+2 (throws DomainError otherwise).  Fills the theorem fields only.
EdgeVerdict classify_edge_theorem(const Graph& g, const CliqueTree& t, Edge e, int kappa,
                                  TheoremReading reading = TheoremReading::covering_labels);

struct SplitPartition {
  VertexSet clique_part;
  VertexSet stable_part;
};

// A split partition if g is a split graph, otherwise nullopt.  Brute force
// over candidate cliques; prefers the largest clique part, then the
// lexicographically smallest.  Throws ResourceError above max_n.
std::optional<SplitPartition> split_partition(const Graph& g, int max_n = 16);

struct SplitReport {
  SplitPartition partition;
  bool hypothesis_met = false;          // |V| >= kappa+2
  bool cross_edges_contractible = false;  // every K-I edge oracle-contractible
  bool regular = false;
  bool contraction_critical = false;    // no edge oracle-contractible
  // regular split graphs meeting the hypothesis are predicted contraction
  // critical; the oracle verdict is recorded next to the prediction
  bool predicted_critical = false;
  std::optional<bool> prediction_agrees;
};

struct CorollaryChecks {
  std::optional<bool> simplicial;   // edges at simplicial vertices contractible
  std::optional<bool> two_k_bound;  // contractible_count >= 2*kappa
  std::optional<SplitReport> split;
};

enum class VerdictMethod { theorem, oracle, both };

struct FullReportOptions {
  VerdictMethod method = VerdictMethod::both;
  int max_oracle_n = 32;  // above this the oracle side is left unevaluated
  int max_split_n = 16;
};

struct ContractibilityReport {
  int n = 0;
  int m = 0;
  int kappa = 0;
  bool theorem_evaluated = false;  // false when |V| < kappa+2 or method=oracle
  bool oracle_evaluated = false;
  std::vector<EdgeVerdict> verdicts;  // lexicographic edge order
  int contractible_count = 0;  // oracle side when evaluated, else theorem side
  std::vector<Edge> discrepancies;
  CorollaryChecks corollaries;
};

// Per-edge verdicts from the theorem classifier and the kappa-drop oracle
// for a connected chordal graph, with corollary checks attached.
ContractibilityReport full_report(const Graph& g, const FullReportOptions& opts = {});

// True iff every edge with a simplicial endpoint is oracle-contractible.
bool check_simplicial_corollary(const Graph& g, const ContractibilityReport& report);

// True iff contractible_count >= 2*kappa.
bool check_2k_bound(const Graph& g, const ContractibilityReport& report);

SplitReport split_contractibility_report(const Graph& g, const SplitPartition& p,
                                         const ContractibilityReport& report);

const char* reason_name(TheoremReason r);
std::string report_to_json(const ContractibilityReport& report, int indent = 2);

}  // namespace chordal
