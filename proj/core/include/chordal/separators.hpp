#pragma once

#include <string>
#include <vector>

#include "chordal/clique_tree.hpp"
#include "chordal/graph.hpp"

namespace chordal {

// M' (one label intersection per tree edge, multiset), M'' (the
// inclusion-minimal members of M'), and the enumeration oracle's
// minimal-separator set.
struct SeparatorFamily {
  std::vector<VertexSet> m_prime;
  std::vector<VertexSet> m_double_prime;
  std::vector<VertexSet> oracle_minimal_separators;
  bool oracle_filled = false;
};

// Label intersections in tree-edge order.  Throws InconsistencyError if an
// intersection is empty (the source graph was disconnected).
std::vector<VertexSet> edge_labels(const CliqueTree& t);

// Deduplicates, then keeps the sets that contain no other member as a
// proper subset.  Output sorted lexicographically.
std::vector<VertexSet> minimal_filter(const std::vector<VertexSet>& m_prime);

// All S such that g - S has two or more components each adjacent to every
// vertex of S (full-component criterion).  Subset enumeration; throws
// ResourceError when vertex_count > max_n.  Output sorted lexicographically.
std::vector<VertexSet> brute_force_minimal_separators(const Graph& g, int max_n = 16);

// kappa(g): minimum size of a set whose removal disconnects g or leaves a
// single vertex; n-1 for complete graphs.  Subset enumeration for small n,
// max-flow with vertex splitting above that.
int vertex_connectivity(const Graph& g);

struct MinCutFamily {
  int kappa = 0;
  std::vector<VertexSet> cutsets;  // all size-kappa separating sets
};

// gamma_G with kappa attached.  Complete graphs return kappa = n-1 with no
// cutsets.  Throws ResourceError when vertex_count > max_n.
MinCutFamily minimum_cutsets(const Graph& g, int max_n = 16);

struct SeparatorComparison {
  SeparatorFamily family;
  int kappa = 0;
  std::vector<VertexSet> missing_from_m2;  // oracle members absent from M''
  std::vector<VertexSet> extra_in_m2;      // M'' members absent from the oracle
  bool m_prime_matches_oracle = false;     // distinct(M') == oracle set
};

// Fills all three separator sources for a connected chordal graph and
// reports where the M'' filter disagrees with the enumeration oracle.
SeparatorComparison compare_separator_sources(const Graph& g, const CliqueTree& t,
                                              int max_n = 16);

std::string comparison_to_json(const Graph& g, const SeparatorComparison& cmp,
                               int indent = 2);

namespace detail {
// Increasing-size subset enumeration; requires n <= 25 or so to be sane.
int vertex_connectivity_enum(const Graph& g);
// Min over pair max-flows on the vertex-split digraph.
int vertex_connectivity_flow(const Graph& g);
}  // namespace detail

}  // namespace chordal
