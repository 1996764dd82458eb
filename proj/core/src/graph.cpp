#include "chordal/graph.hpp"

#include <queue>

namespace chordal {

ContractionResult contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw InvalidEdgeError("edge not present in graph");
  const int n = g.vertex_count();
  const int u = e.u;  // kept slot, becomes the merged vertex
  const int v = e.v;  // deleted slot

  ContractionResult res;
  res.vertex_map.resize(n);
  for (int w = 0; w < n; ++w) {
    if (w == v)
      res.vertex_map[w] = u;
    else
      res.vertex_map[w] = w < v ? w : w - 1;
  }
  res.merged_vertex = res.vertex_map[u];

  Graph h(n - 1);
  for (int w = 0; w < n; ++w) {
    for (int x : g.neighbors(w)) {
      if (x < w) continue;
      int a = res.vertex_map[w];
      int b = res.vertex_map[x];
      if (a == b) continue;  // the contracted edge itself
      h.add_edge(a, b);
    }
  }
  res.graph = std::move(h);
  return res;
}

InducedDeleteResult induced_delete(const Graph& g, const VertexSet& s) {
  const int n = g.vertex_count();
  std::vector<char> del(n, 0);
  for (int v : s) {
    if (v < 0 || v >= n) throw RangeError("vertex id out of range");
    del[v] = 1;
  }
  InducedDeleteResult res;
  res.vertex_map.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!del[v]) res.vertex_map[v] = next++;

  Graph h(next);
  for (int v = 0; v < n; ++v) {
    if (del[v]) continue;
    for (int w : g.neighbors(v))
      if (w > v && !del[w]) h.add_edge(res.vertex_map[v], res.vertex_map[w]);
  }
  res.graph = std::move(h);
  return res;
}

const VertexSet& neighborhood(const Graph& g, int v) { return g.neighbors(v); }

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> comps;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

bool is_simplicial(const Graph& g, int v) {
  const VertexSet& nb = g.neighbors(v);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j])) return false;
  return true;
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV offset basis
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;  // FNV prime
    }
  };
  mix(static_cast<std::uint64_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  return h;
}

}  // namespace chordal
