#include "chordal/separators.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

#include "bitgraph.hpp"

namespace chordal {

std::vector<VertexSet> edge_labels(const CliqueTree& t) {
  std::vector<VertexSet> out;
  out.reserve(t.edges.size());
  for (auto [i, j] : t.edges) {
    VertexSet s = set_intersect(t.labels[i], t.labels[j]);
    if (s.empty())
      throw InconsistencyError("empty tree-edge label intersection (disconnected source graph)");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<VertexSet> minimal_filter(const std::vector<VertexSet>& m_prime) {
  std::vector<VertexSet> distinct = m_prime;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<VertexSet> out;
  for (const VertexSet& y : distinct) {
    bool keep = true;
    for (const VertexSet& z : distinct) {
      if (is_proper_subset(z, y)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(y);
  }
  return out;
}

std::vector<VertexSet> brute_force_minimal_separators(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n || n > 25)
    throw ResourceError("graph too large for separator enumeration");
  auto adj = detail::adjacency_masks(g);
  detail::Mask all = detail::full_mask(n);
  std::vector<VertexSet> out;
  for (detail::Mask s = 0; s <= all; ++s) {
    if (detail::is_minimal_separator_mask(adj, all, s))
      out.push_back(detail::mask_to_set(s));
    if (s == all) break;  // guard against wrap-around for n = 25
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

int vertex_connectivity_enum(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 25) throw ResourceError("graph too large for connectivity enumeration");
  if (n <= 1) return std::max(0, n - 1);
  auto adj = adjacency_masks(g);
  Mask all = full_mask(n);
  if (!mask_connected(adj, all)) return 0;
  if (g.is_complete()) return n - 1;
  for (int s = 1; s <= n - 2; ++s) {
    Mask sub = full_mask(s);
    while (sub <= all) {
      if (!mask_connected(adj, all & ~sub)) return s;
      sub = next_subset_same_size(sub);
    }
  }
  return n - 1;  // unreachable for non-complete graphs
}

namespace {

// Unit-capacity max flow (Dinic) on the vertex-split digraph: vertex v
// becomes v_in = 2v, v_out = 2v+1 with capacity 1 between them; each graph
// edge becomes two infinite arcs out->in.
struct FlowNet {
  struct Arc {
    int to, cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> head;
  std::vector<int> level, iter;

  explicit FlowNet(int nodes) : head(nodes), level(nodes), iter(nodes) {}

  void add(int from, int to, int cap) {
    head[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap});
    head[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> q{s};
    level[s] = 0;
    for (size_t i = 0; i < q.size(); ++i) {
      int v = q[i];
      for (int id : head[v]) {
        const Arc& a = arcs[id];
        if (a.cap > 0 && level[a.to] == -1) {
          level[a.to] = level[v] + 1;
          q.push_back(a.to);
        }
      }
    }
    return level[t] != -1;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < static_cast<int>(head[v].size()); ++i) {
      int id = head[v][i];
      Arc& a = arcs[id];
      if (a.cap > 0 && level[a.to] == level[v] + 1) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          arcs[id ^ 1].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  int max_flow(int s, int t, int cutoff) {
    int flow = 0;
    while (flow < cutoff && bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (int f = dfs(s, t, cutoff - flow)) {
        flow += f;
        if (flow >= cutoff) break;
      }
    }
    return flow;
  }
};

// Local connectivity for non-adjacent u, v: max number of internally
// disjoint u-v paths, capped at `cutoff`.
int pair_connectivity(const Graph& g, int u, int v, int cutoff) {
  const int n = g.vertex_count();
  FlowNet net(2 * n);
  const int inf = n + 1;
  for (int w = 0; w < n; ++w) net.add(2 * w, 2 * w + 1, w == u || w == v ? inf : 1);
  for (const Edge& e : g.edges()) {
    net.add(2 * e.u + 1, 2 * e.v, inf);
    net.add(2 * e.v + 1, 2 * e.u, inf);
  }
  return net.max_flow(2 * u + 1, 2 * v, cutoff);
}

}  // namespace

int vertex_connectivity_flow(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return std::max(0, n - 1);
  if (!is_connected(g)) return 0;
  if (g.is_complete()) return n - 1;

  // kappa = min over (s, non-neighbors of s) and non-adjacent pairs inside
  // N(s): any minimum separator either avoids s or splits N(s).
  int s = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(s)) s = v;

  int best = n - 1;
  for (int t = 0; t < n; ++t)
    if (t != s && !g.has_edge(s, t)) best = std::min(best, pair_connectivity(g, s, t, best));
  const VertexSet& nb = g.neighbors(s);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (!g.has_edge(nb[i], nb[j]))
        best = std::min(best, pair_connectivity(g, nb[i], nb[j], best));
  return best;
}

}  // namespace detail

int vertex_connectivity(const Graph& g) {
  return g.vertex_count() <= 12 ? detail::vertex_connectivity_enum(g)
                                : detail::vertex_connectivity_flow(g);
}

MinCutFamily minimum_cutsets(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  MinCutFamily fam;
  if (n <= 1) {
    fam.kappa = std::max(0, n - 1);
    return fam;
  }
  if (g.is_complete()) {
    fam.kappa = n - 1;  // gamma_G undefined for complete graphs, kept empty
    return fam;
  }
  if (n > max_n || n > 25) throw ResourceError("graph too large for cut-set enumeration");

  auto adj = detail::adjacency_masks(g);
  detail::Mask all = detail::full_mask(n);
  if (!detail::mask_connected(adj, all)) {
    fam.kappa = 0;
    fam.cutsets.push_back({});
    return fam;
  }
  for (int s = 1; s <= n - 2; ++s) {
    detail::Mask sub = detail::full_mask(s);
    while (sub <= all) {
      if (!detail::mask_connected(adj, all & ~sub))
        fam.cutsets.push_back(detail::mask_to_set(sub));
      sub = detail::next_subset_same_size(sub);
    }
    if (!fam.cutsets.empty()) {
      fam.kappa = s;
      std::sort(fam.cutsets.begin(), fam.cutsets.end());
      return fam;
    }
  }
  fam.kappa = n - 1;
  return fam;
}

SeparatorComparison compare_separator_sources(const Graph& g, const CliqueTree& t,
                                              int max_n) {
  SeparatorComparison cmp;
  cmp.kappa = vertex_connectivity(g);
  cmp.family.m_prime = edge_labels(t);
  cmp.family.m_double_prime = minimal_filter(cmp.family.m_prime);
  cmp.family.oracle_minimal_separators = brute_force_minimal_separators(g, max_n);
  cmp.family.oracle_filled = true;

  std::vector<VertexSet> distinct = cmp.family.m_prime;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  cmp.m_prime_matches_oracle = distinct == cmp.family.oracle_minimal_separators;

  for (const VertexSet& s : cmp.family.oracle_minimal_separators)
    if (!std::binary_search(cmp.family.m_double_prime.begin(),
                            cmp.family.m_double_prime.end(), s))
      cmp.missing_from_m2.push_back(s);
  for (const VertexSet& s : cmp.family.m_double_prime)
    if (!std::binary_search(cmp.family.oracle_minimal_separators.begin(),
                            cmp.family.oracle_minimal_separators.end(), s))
      cmp.extra_in_m2.push_back(s);
  return cmp;
}

std::string comparison_to_json(const Graph& g, const SeparatorComparison& cmp,
                               int indent) {
  nlohmann::json j;
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(graph_hash(g)));
  j["graph_hash"] = buf;
  j["kappa"] = cmp.kappa;
  j["m_prime"] = cmp.family.m_prime;
  j["m_double_prime"] = cmp.family.m_double_prime;
  j["oracle"] = cmp.family.oracle_minimal_separators;
  j["missing_from_m2"] = cmp.missing_from_m2;
  j["extra_in_m2"] = cmp.extra_in_m2;
  return j.dump(indent);
}

}  // namespace chordal
