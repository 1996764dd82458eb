#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "chordal/errors.hpp"
#include "chordal/setops.hpp"

namespace chordal {

// Unordered edge, normalized so that u < v.
struct Edge {
  int u;
  int v;

  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw InvalidEdgeError("edge endpoints must differ");
  }
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph over dense 0-based vertex ids.  Adjacency lists
// are kept sorted; there are no self loops and no parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n >= 0 ? static_cast<size_t>(n) : 0) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  // Idempotent: inserting an existing edge is a no-op.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("self-loops are not allowed");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return set_contains(adj_[u], v);
  }

  const VertexSet& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  // All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[u])
        if (v > u) out.emplace_back(u, v);
    return out;
  }

  bool is_complete() const {
    const long long n = vertex_count();
    return 2LL * m_ == n * (n - 1);
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw RangeError("vertex id out of range");
  }

  std::vector<VertexSet> adj_;
  int m_ = 0;
};

// Result of contracting edge {u,v}: max(u,v) is deleted, min(u,v)'s slot
// becomes the merged vertex, ids above the deleted one shift down by one.
// vertex_map maps every old id to its new id; both endpoints map to
// merged_vertex.
struct ContractionResult {
  Graph graph;
  int merged_vertex = -1;
  std::vector<int> vertex_map;
};

// Result of deleting a vertex set: ids are compacted, vertex_map maps old
// ids to new ones with -1 for deleted vertices.
struct InducedDeleteResult {
  Graph graph;
  std::vector<int> vertex_map;
};

ContractionResult contract_edge(const Graph& g, Edge e);
InducedDeleteResult induced_delete(const Graph& g, const VertexSet& s);
const VertexSet& neighborhood(const Graph& g, int v);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_simplicial(const Graph& g, int v);

// FNV-1a over the vertex count and the sorted edge list; stable across
// platforms, used to key counterexample records.
std::uint64_t graph_hash(const Graph& g);

}  // namespace chordal
