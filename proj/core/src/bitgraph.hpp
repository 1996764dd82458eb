#pragma once

// Internal bitmask representation for the enumeration oracles.  Callers
// guarantee n <= 31; a vertex set is a uint32_t with bit v set for vertex v.

#include <bit>
#include <cstdint>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal::detail {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  return adj;
}

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Component of `present` containing the lowest bit of `start`.
inline Mask component_from(const std::vector<Mask>& adj, Mask present, Mask start) {
  Mask seen = start & present;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    Mask f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v];
    }
    next &= present & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Empty and singleton sets count as connected.
inline bool mask_connected(const std::vector<Mask>& adj, Mask present) {
  if (!present) return true;
  return component_from(adj, present, present & (~present + 1)) == present;
}

// True iff removing `sep` leaves at least two components whose neighborhoods
// cover all of `sep` (the full-component criterion for minimal separators).
inline bool is_minimal_separator_mask(const std::vector<Mask>& adj, Mask all,
                                      Mask sep) {
  Mask rest = all & ~sep;
  int full_components = 0;
  while (rest) {
    Mask comp = component_from(adj, rest, rest & (~rest + 1));
    rest &= ~comp;
    Mask nb = 0;
    Mask c = comp;
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      nb |= adj[v];
    }
    if ((nb & sep) == sep && ++full_components >= 2) return true;
  }
  return false;
}

// Next subset of the same popcount (Gosper's hack); caller stops when the
// result overflows `full`.
inline Mask next_subset_same_size(Mask x) {
  Mask c = x & (~x + 1);
  Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

inline VertexSet mask_to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace chordal::detail
