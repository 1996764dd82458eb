#include "chordal/clique_tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace chordal {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::string set_to_braces(const VertexSet& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << "}";
  return os.str();
}

}  // namespace

CliqueTree build_clique_tree(const Graph& g) {
  if (!is_connected(g)) throw DomainError("clique tree requires a connected graph");
  ChordalityResult ch = check_chordal(g);
  if (!ch.chordal) throw DomainError("clique tree requires a chordal graph");

  CliqueTree t;
  t.vertex_count = g.vertex_count();
  t.labels = maximal_cliques(g, ch.peo);
  const int c = t.node_count();

  struct Cand {
    int w, i, j;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < c; ++i) {
    for (int j = i + 1; j < c; ++j) {
      int w = static_cast<int>(set_intersect(t.labels[i], t.labels[j]).size());
      if (w > 0) cands.push_back({w, i, j});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  UnionFind uf(c);
  for (const Cand& e : cands) {
    if (static_cast<int>(t.edges.size()) == c - 1) break;
    if (uf.unite(e.i, e.j)) t.edges.emplace_back(e.i, e.j);
  }
  if (static_cast<int>(t.edges.size()) != c - 1)
    throw DomainError("clique intersection graph is disconnected");
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

TreeDecompCheck validate_tree_decomposition(const TreeDecomposition& t, const Graph& g) {
  TreeDecompCheck check;
  const int n = g.vertex_count();

  // all vertices are covered
  std::vector<char> covered(n, 0);
  bool in_range = true;
  for (const VertexSet& l : t.labels)
    for (int v : l) {
      if (v < 0 || v >= n) {
        in_range = false;
      } else {
        covered[v] = 1;
      }
    }
  check.vertices_covered =
      in_range && std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
  if (!check.vertices_covered) check.detail = "vertex coverage failed";

  // all edges are covered
  check.edges_covered = true;
  for (const Edge& e : g.edges()) {
    bool found = false;
    for (const VertexSet& l : t.labels) {
      if (set_contains(l, e.u) && set_contains(l, e.v)) {
        found = true;
        break;
      }
    }
    if (!found) {
      check.edges_covered = false;
      if (check.detail.empty())
        check.detail = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not covered";
      break;
    }
  }

  // nodes holding each vertex form a connected subtree
  const int c = t.node_count();
  std::vector<std::vector<int>> nbr(c);
  for (auto [i, j] : t.edges) {
    nbr[i].push_back(j);
    nbr[j].push_back(i);
  }
  check.connectivity_ok = true;
  for (int v = 0; v < n && check.connectivity_ok; ++v) {
    std::vector<char> holds(c, 0);
    int count = 0, first = -1;
    for (int x = 0; x < c; ++x) {
      if (set_contains(t.labels[x], v)) {
        holds[x] = 1;
        ++count;
        if (first == -1) first = x;
      }
    }
    if (count <= 1) continue;
    std::vector<char> seen(c, 0);
    std::queue<int> q;
    q.push(first);
    seen[first] = 1;
    int reached = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : nbr[x]) {
        if (holds[y] && !seen[y]) {
          seen[y] = 1;
          ++reached;
          q.push(y);
        }
      }
    }
    if (reached != count) {
      check.connectivity_ok = false;
      if (check.detail.empty())
        check.detail = "subtree for vertex " + std::to_string(v) + " is disconnected";
    }
  }
  return check;
}

RelabeledTree tree_minus_separator(const CliqueTree& t, const VertexSet& s) {
  RelabeledTree out;
  out.tag = RelabelTag::minus_separator;
  out.edges = t.edges;
  out.vertex_count = t.vertex_count;
  out.labels.reserve(t.labels.size());
  for (const VertexSet& l : t.labels)
    out.labels.push_back(sets_intersect(l, s) ? set_minus(l, s) : l);
  return out;
}

RelabeledTree tree_contract(const CliqueTree& t, Edge e, const ContractionResult& contraction) {
  bool covered = false;
  for (const VertexSet& l : t.labels)
    if (set_contains(l, e.u) && set_contains(l, e.v)) {
      covered = true;
      break;
    }
  if (!covered) throw InconsistencyError("edge not covered by any clique tree label");

  RelabeledTree out;
  out.tag = RelabelTag::contracted;
  out.edges = t.edges;
  out.vertex_count = t.vertex_count - 1;
  out.labels.reserve(t.labels.size());
  for (const VertexSet& l : t.labels) {
    VertexSet nl;
    bool hit = false;
    for (int v : l) {
      if (v == e.u || v == e.v)
        hit = true;
      else
        nl.push_back(contraction.vertex_map[v]);
    }
    if (hit) nl.push_back(contraction.merged_vertex);
    sort_unique(nl);
    out.labels.push_back(std::move(nl));
  }
  return out;
}

bool tree_connected_check(const TreeDecomposition& t) {
  for (auto [i, j] : t.edges)
    if (!sets_intersect(t.labels[i], t.labels[j])) return false;
  return true;
}

std::string to_dot(const CliqueTree& t) {
  std::ostringstream os;
  os << "graph clique_tree {\n  node [shape=box];\n";
  for (int i = 0; i < t.node_count(); ++i)
    os << "  c" << i << " [label=\"" << set_to_braces(t.labels[i]) << "\"];\n";
  for (auto [i, j] : t.edges)
    os << "  c" << i << " -- c" << j << " [label=\""
       << set_to_braces(set_intersect(t.labels[i], t.labels[j])) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace chordal
