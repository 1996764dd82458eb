#include "chordal/generators.hpp"

#include <algorithm>
#include <sstream>

#include "chordal/chordal.hpp"

#include "bitgraph.hpp"

namespace chordal {

Graph random_chordal(int n, double density, std::uint64_t seed) {
  if (n < 1) throw DomainError("need at least one vertex");
  SplitMix64 rng(seed);
  Graph g(n);
  std::vector<VertexSet> cliques{{0}};
  for (int v = 1; v < n; ++v) {
    const size_t idx = rng.below(cliques.size());
    VertexSet base = cliques[idx];
    // back-neighborhood size: 1 + Binomial(|base|-1, density)
    int size = 1;
    for (size_t i = 1; i < base.size(); ++i)
      if (rng.unit() < density) ++size;
    VertexSet pick = base;
    for (int i = static_cast<int>(pick.size()) - 1; i > 0; --i)
      std::swap(pick[i], pick[rng.below(i + 1)]);
    pick.resize(size);
    std::sort(pick.begin(), pick.end());
    for (int w : pick) g.add_edge(v, w);
    pick.push_back(v);  // v is larger than every existing id
    if (size == static_cast<int>(base.size())) {
      cliques[idx] = std::move(pick);  // old clique swallowed by the new one
    } else {
      cliques.push_back(std::move(pick));
    }
  }
  return g;
}

Graph random_ktree(int n, int k, std::uint64_t seed) {
  if (k < 0) throw DomainError("k must be non-negative");
  if (n <= k) throw DomainError("a k-tree needs at least k+1 vertices");
  SplitMix64 rng(seed);
  Graph g(n);
  for (int u = 0; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) g.add_edge(u, v);

  // all k-subsets of the initial K_{k+1}
  std::vector<VertexSet> kcliques;
  if (k >= 1) {
    for (int skip = 0; skip <= k; ++skip) {
      VertexSet c;
      for (int u = 0; u <= k; ++u)
        if (u != skip) c.push_back(u);
      kcliques.push_back(std::move(c));
    }
  } else {
    kcliques.push_back({});  // 0-tree: vertices attach to nothing
  }

  for (int v = k + 1; v < n; ++v) {
    const VertexSet base = kcliques[rng.below(kcliques.size())];
    for (int w : base) g.add_edge(v, w);
    for (size_t drop = 0; drop < base.size(); ++drop) {
      VertexSet c;
      for (size_t i = 0; i < base.size(); ++i)
        if (i != drop) c.push_back(base[i]);
      c.push_back(v);
      std::sort(c.begin(), c.end());
      kcliques.push_back(std::move(c));
    }
  }
  return g;
}

Graph random_split(int n_clique, int n_stable, double p, std::uint64_t seed,
                   bool drop_isolated_stable) {
  if (n_clique < 1) throw DomainError("clique part needs at least one vertex");
  if (n_stable < 0) throw DomainError("stable part cannot be negative");
  SplitMix64 rng(seed);
  Graph g(n_clique + n_stable);
  for (int u = 0; u < n_clique; ++u)
    for (int v = u + 1; v < n_clique; ++v) g.add_edge(u, v);
  for (int s = n_clique; s < n_clique + n_stable; ++s)
    for (int u = 0; u < n_clique; ++u)
      if (rng.unit() < p) g.add_edge(s, u);
  if (!drop_isolated_stable) return g;

  VertexSet isolated;
  for (int s = n_clique; s < n_clique + n_stable; ++s)
    if (g.degree(s) == 0) isolated.push_back(s);
  return induced_delete(g, isolated).graph;
}

Graph random_connected_graph(int n, double density, std::uint64_t seed) {
  if (n < 1) throw DomainError("need at least one vertex");
  SplitMix64 rng(seed);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng.below(v)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && rng.unit() < density) g.add_edge(u, v);
  return g;
}

Graph generate(const GenSpec& spec) {
  switch (spec.family) {
    case GenFamily::chordal:
      return random_chordal(spec.n, spec.density, spec.seed);
    case GenFamily::ktree:
      return random_ktree(spec.n, spec.k, spec.seed);
    case GenFamily::split:
      if (spec.k < 1 || spec.k > spec.n)
        throw DomainError("split graphs need 1 <= k <= n (clique size)");
      return random_split(spec.k, spec.n - spec.k, spec.density, spec.seed);
    case GenFamily::all_graphs:
      return random_connected_graph(spec.n, spec.density, spec.seed);
  }
  throw DomainError("unknown generator family");
}

std::string genspec_comment(const GenSpec& spec) {
  const char* fam = "chordal";
  switch (spec.family) {
    case GenFamily::chordal:
      fam = "chordal";
      break;
    case GenFamily::ktree:
      fam = "ktree";
      break;
    case GenFamily::split:
      fam = "split";
      break;
    case GenFamily::all_graphs:
      fam = "all-graphs";
      break;
  }
  std::ostringstream os;
  os << "# gen family=" << fam << " n=" << spec.n << " k=" << spec.k
     << " density=" << spec.density << " seed=" << spec.seed;
  return os.str();
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1) throw DomainError("need at least one vertex");
  if (n > 7) throw ResourceError("exhaustive enumeration is limited to n <= 7");

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int np = static_cast<int>(pairs.size());

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << np); ++mask) {
    std::vector<detail::Mask> adj(n, 0);
    for (int i = 0; i < np; ++i) {
      if ((mask >> i) & 1) {
        adj[pairs[i].first] |= detail::Mask{1} << pairs[i].second;
        adj[pairs[i].second] |= detail::Mask{1} << pairs[i].first;
      }
    }
    if (!detail::mask_connected(adj, detail::full_mask(n))) continue;
    Graph g(n);
    for (int i = 0; i < np; ++i)
      if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    fn(g);
  }
}

void for_each_connected_chordal(int n, const std::function<void(const Graph&)>& fn) {
  for_each_connected_graph(n, [&](const Graph& g) {
    if (is_chordal(g)) fn(g);
  });
}

std::vector<Graph> enumerate_small_chordal(int n) {
  std::vector<Graph> out;
  for_each_connected_chordal(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace chordal
