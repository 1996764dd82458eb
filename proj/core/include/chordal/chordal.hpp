#pragma once

#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

// A vertex order; position in the vector is elimination time.
using EliminationOrder = std::vector<int>;

// Maximum cardinality search visit order.  Ties are broken toward the
// smallest vertex id, so the order is deterministic.  The reverse of the
// returned order is a perfect elimination order iff the graph is chordal.
EliminationOrder mcs_order(const Graph& g);

// True iff for every vertex, its neighbors later in the order form a clique.
bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order);

struct ChordalityResult {
  bool chordal = false;
  EliminationOrder peo;            // filled when chordal
  int violating_vertex = -1;       // a vertex whose later neighbors are not a clique
  std::vector<int> chordless_cycle;  // an induced cycle of length >= 4 when not chordal
};

ChordalityResult check_chordal(const Graph& g);
bool is_chordal(const Graph& g);

// The maximal cliques of a chordal graph from a perfect elimination order,
// each sorted, listed lexicographically.
// Throws DomainError if the order is not a perfect elimination order.
std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrder& peo);

}  // namespace chordal
