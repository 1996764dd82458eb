#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chordal/chordal.hpp"
#include "chordal/graph.hpp"

namespace chordal {

// Tree over labeled nodes; edges are unordered node-index pairs (i < j),
// kept sorted.  vertex_count is the id space of the labels.
struct TreeDecomposition {
  std::vector<VertexSet> labels;
  std::vector<std::pair<int, int>> edges;
  int vertex_count = 0;

  int node_count() const { return static_cast<int>(labels.size()); }
};

// Tree decomposition whose labels are exactly the maximal cliques of a
// chordal graph.
struct CliqueTree : TreeDecomposition {};

// A clique tree whose labels were rewritten by separator removal or edge
// contraction.  Structure is identical to the source tree; the labels may
// no longer be maximal cliques and may be comparable or empty.
enum class RelabelTag { minus_separator, contracted };
struct RelabeledTree : TreeDecomposition {
  RelabelTag tag = RelabelTag::minus_separator;
};

// Maximum-weight spanning tree of the clique intersection graph, weights
// |Ci cap Cj|, Kruskal order (-weight, i, j) so the tree is deterministic.
// Throws DomainError if g is not chordal or not connected.
CliqueTree build_clique_tree(const Graph& g);

struct TreeDecompCheck {
  bool vertices_covered = false;
  bool edges_covered = false;
  bool connectivity_ok = false;
  std::string detail;  // first violation found, empty when ok

  bool ok() const { return vertices_covered && edges_covered && connectivity_ok; }
};

// Checks the three tree-decomposition conditions independently.
TreeDecompCheck validate_tree_decomposition(const TreeDecomposition& t, const Graph& g);

// Labels intersecting s have s removed; structure unchanged.  Labels stay in
// the source id space.
RelabeledTree tree_minus_separator(const CliqueTree& t, const VertexSet& s);

// Labels containing an endpoint of e are rewritten to use the merged vertex,
// and every label is renumbered through the contraction's vertex_map so the
// result lives in the id space of the contracted graph.
// Throws InconsistencyError if no label covers e.
RelabeledTree tree_contract(const CliqueTree& t, Edge e, const ContractionResult& contraction);

// True iff every tree edge has a non-empty label intersection.  For a clique
// tree this is equivalent to connectivity of the underlying chordal graph;
// for relabeled trees it is necessary but not sufficient.
bool tree_connected_check(const TreeDecomposition& t);

// Graphviz DOT with deterministic node order; node and edge labels are the
// vertex sets in ascending order.
std::string to_dot(const CliqueTree& t);

}  // namespace chordal
