#include "chordal/chordal.hpp"

#include <algorithm>
#include <queue>

namespace chordal {

EliminationOrder mcs_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  EliminationOrder order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    visited[best] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!visited[w]) ++weight[w];
  }
  return order;
}

namespace {

// Position of each vertex in the order, or throws if not a permutation.
std::vector<int> positions_of(const Graph& g, const EliminationOrder& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw DomainError("order length does not match vertex count");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || pos[v] != -1)
      throw DomainError("order is not a permutation of the vertices");
    pos[v] = i;
  }
  return pos;
}

// Returns -1 if the order is perfect, otherwise a vertex whose later
// neighbors are not a clique, along with two non-adjacent later neighbors.
int find_peo_violation(const Graph& g, const EliminationOrder& order,
                       const std::vector<int>& pos, int* out_x, int* out_y) {
  for (int v : order) {
    VertexSet later;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    if (later.size() < 2) continue;
    // It suffices to check the earliest later neighbor against the rest.
    int p = later[0];
    for (int w : later)
      if (pos[w] < pos[p]) p = w;
    for (int w : later) {
      if (w != p && !g.has_edge(p, w)) {
        if (out_x) *out_x = p;
        if (out_y) *out_y = w;
        return v;
      }
    }
  }
  return -1;
}

// Shortest a-c path in g avoiding N[b] \ {a,c}; with b it closes a chordless
// cycle of length >= 4.  Empty result if no such path exists.
std::vector<int> hole_through(const Graph& g, int a, int b, int c) {
  const int n = g.vertex_count();
  std::vector<char> blocked(n, 0);
  blocked[b] = 1;
  for (int w : g.neighbors(b)) blocked[w] = 1;
  blocked[a] = 0;
  blocked[c] = 0;
  std::vector<int> prev(n, -2);
  std::queue<int> q;
  q.push(a);
  prev[a] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == c) break;
    for (int w : g.neighbors(v)) {
      if (blocked[w] || prev[w] != -2) continue;
      prev[w] = v;
      q.push(w);
    }
  }
  if (prev[c] == -2) return {};
  std::vector<int> cycle{b};
  for (int v = c; v != -1; v = prev[v]) cycle.push_back(v);
  std::reverse(cycle.begin() + 1, cycle.end());  // b, a, ..., c
  return cycle;
}

// Some induced cycle of length >= 4 in a non-chordal graph.  Scans path
// triples a-b-c with a,c non-adjacent; for a triple lying on a hole the
// search succeeds, and any returned cycle is chordless by construction.
std::vector<int> find_chordless_cycle(const Graph& g, int first_a, int first_b,
                                      int first_c) {
  if (auto cyc = hole_through(g, first_a, first_b, first_c); !cyc.empty())
    return cyc;
  for (int b = 0; b < g.vertex_count(); ++b) {
    const VertexSet& nb = g.neighbors(b);
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) continue;
        if (auto cyc = hole_through(g, nb[i], b, nb[j]); !cyc.empty()) return cyc;
      }
    }
  }
  return {};
}

}  // namespace

bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& order) {
  auto pos = positions_of(g, order);
  return find_peo_violation(g, order, pos, nullptr, nullptr) == -1;
}

ChordalityResult check_chordal(const Graph& g) {
  ChordalityResult res;
  EliminationOrder visit = mcs_order(g);
  EliminationOrder peo(visit.rbegin(), visit.rend());
  auto pos = positions_of(g, peo);
  int x = -1, y = -1;
  int bad = find_peo_violation(g, peo, pos, &x, &y);
  if (bad == -1) {
    res.chordal = true;
    res.peo = std::move(peo);
    return res;
  }
  res.chordal = false;
  res.violating_vertex = bad;
  res.chordless_cycle = find_chordless_cycle(g, x, bad, y);
  return res;
}

bool is_chordal(const Graph& g) { return check_chordal(g).chordal; }

std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrder& peo) {
  auto pos = positions_of(g, peo);
  if (find_peo_violation(g, peo, pos, nullptr, nullptr) != -1)
    throw DomainError("not a perfect elimination order (graph not chordal?)");

  const int n = g.vertex_count();
  // later[v] = neighbors of v eliminated after v, sorted by id
  std::vector<VertexSet> later(n);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) later[v].push_back(w);

  // Candidate {v} + later(v) is a maximal clique unless it sits inside the
  // candidate of an earlier-eliminated neighbor (Fulkerson-Gross).
  std::vector<VertexSet> cliques;
  for (int v : peo) {
    VertexSet cand = later[v];
    cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
    bool maximal = true;
    for (int u : g.neighbors(v)) {
      if (pos[u] < pos[v] && is_subset(cand, later[u])) {
        maximal = false;
        break;
      }
    }
    if (maximal) cliques.push_back(std::move(cand));
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

}  // namespace chordal
