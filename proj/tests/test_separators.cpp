#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "chordal/clique_tree.hpp"
#include "chordal/generators.hpp"
#include "chordal/separators.hpp"

#include "test_util.hpp"

using namespace chordal;
using namespace testutil;

namespace {

std::vector<VertexSet> distinct_sorted(std::vector<VertexSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

TEST_CASE("edge labels of fixed trees") {
  CHECK(edge_labels(build_clique_tree(path_graph(3))) == std::vector<VertexSet>{{1}});
  CHECK(edge_labels(build_clique_tree(two_k4s())) == std::vector<VertexSet>{{2, 3, 4}});

  auto nest = edge_labels(build_clique_tree(g_nest()));
  std::multiset<VertexSet> got(nest.begin(), nest.end());
  CHECK(got == std::multiset<VertexSet>{{0, 1}, {0}});

  // empty intersection means the source graph was disconnected
  CliqueTree broken;
  broken.vertex_count = 2;
  broken.labels = {{0}, {1}};
  broken.edges = {{0, 1}};
  CHECK_THROWS_AS(edge_labels(broken), InconsistencyError);
}

TEST_CASE("minimality filter") {
  CHECK(minimal_filter({{1}}) == std::vector<VertexSet>{{1}});
  // the filter drops a set that strictly contains another member
  CHECK(minimal_filter({{0, 1}, {0}}) == std::vector<VertexSet>{{0}});
  CHECK(minimal_filter({{2, 3}, {4, 5}}) == std::vector<VertexSet>{{2, 3}, {4, 5}});
  CHECK(minimal_filter({}) == std::vector<VertexSet>{});
  // duplicates collapse before filtering
  CHECK(minimal_filter({{1}, {1}, {1, 2}}) == std::vector<VertexSet>{{1}});

  // output is an antichain and a subset of the distinct input
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<VertexSet> in;
    int count = 1 + static_cast<int>(rng.below(6));
    for (int i = 0; i < count; ++i) {
      VertexSet s;
      for (int v = 0; v < 6; ++v)
        if (rng.below(2)) s.push_back(v);
      if (s.empty()) s.push_back(static_cast<int>(rng.below(6)));
      in.push_back(std::move(s));
    }
    auto out = minimal_filter(in);
    auto distinct = distinct_sorted(in);
    for (const VertexSet& y : out) {
      CHECK(std::binary_search(distinct.begin(), distinct.end(), y));
      for (const VertexSet& z : out)
        CHECK_FALSE(is_proper_subset(z, y));
    }
  }
}

TEST_CASE("brute-force minimal separators on fixed graphs") {
  CHECK(brute_force_minimal_separators(path_graph(3)) == std::vector<VertexSet>{{1}});
  CHECK(brute_force_minimal_separators(two_k4s()) == std::vector<VertexSet>{{2, 3, 4}});
  // {0,1} is a minimal 2-3 separator even though it nests {0}
  CHECK(brute_force_minimal_separators(g_nest()) ==
        std::vector<VertexSet>{{0}, {0, 1}});
  CHECK(brute_force_minimal_separators(complete_graph(4)).empty());
  CHECK_THROWS_AS(brute_force_minimal_separators(Graph(17)), ResourceError);
}

TEST_CASE("vertex connectivity on fixed graphs") {
  CHECK(vertex_connectivity(complete_graph(4)) == 3);
  CHECK(vertex_connectivity(path_graph(3)) == 1);
  CHECK(vertex_connectivity(two_k4s()) == 3);
  CHECK(vertex_connectivity(two_k5s_shared_k4()) == 4);
  CHECK(vertex_connectivity(Graph(1)) == 0);
  CHECK(vertex_connectivity(complete_graph(2)) == 1);
  CHECK(vertex_connectivity(Graph(3)) == 0);
  CHECK(vertex_connectivity(cycle_graph(5)) == 2);
}

TEST_CASE("connectivity equals the pairwise separator minimum") {
  auto bf_kappa = [](const Graph& g) {
    const int n = g.vertex_count();
    int best = n - 1;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int s = bf_min_pair_separator(g, u, v);
        if (s >= 0) best = std::min(best, s);
      }
    return best;
  };
  for (int n = 2; n <= 5; ++n)
    for_each_connected_graph(n, [&](const Graph& g) {
      CHECK(vertex_connectivity(g) == bf_kappa(g));
    });
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Graph g = random_connected_graph(6 + static_cast<int>(seed % 5), 0.35, seed * 3 + 2);
    CHECK(vertex_connectivity(g) == bf_kappa(g));
  }
}

TEST_CASE("enumeration and flow connectivity agree") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);  // 4..12
    Graph g = random_connected_graph(n, 0.2 + 0.05 * (seed % 10), seed * 17 + 5);
    CHECK(detail::vertex_connectivity_enum(g) == detail::vertex_connectivity_flow(g));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = random_ktree(8, 2 + static_cast<int>(seed % 3), seed);
    CHECK(detail::vertex_connectivity_enum(g) == detail::vertex_connectivity_flow(g));
  }
}

TEST_CASE("minimum cut sets") {
  MinCutFamily p3 = minimum_cutsets(path_graph(3));
  CHECK(p3.kappa == 1);
  CHECK(p3.cutsets == std::vector<VertexSet>{{1}});

  MinCutFamily tk = minimum_cutsets(two_k4s());
  CHECK(tk.kappa == 3);
  CHECK(tk.cutsets == std::vector<VertexSet>{{2, 3, 4}});

  MinCutFamily nest = minimum_cutsets(g_nest());
  CHECK(nest.kappa == 1);
  CHECK(nest.cutsets == std::vector<VertexSet>{{0}});

  MinCutFamily k4 = minimum_cutsets(complete_graph(4));
  CHECK(k4.kappa == 3);
  CHECK(k4.cutsets.empty());

  CHECK_THROWS_AS(minimum_cutsets(Graph(18)), ResourceError);
}

TEST_CASE("every minimum cut set disconnects and is a minimal separator") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = random_connected_graph(5 + static_cast<int>(seed % 6), 0.4, seed + 7);
    if (g.is_complete()) continue;
    MinCutFamily fam = minimum_cutsets(g);
    auto oracle = brute_force_minimal_separators(g);
    CHECK(!fam.cutsets.empty());
    for (const VertexSet& s : fam.cutsets) {
      CHECK(static_cast<int>(s.size()) == fam.kappa);
      CHECK(connected_components(induced_delete(g, s).graph).size() >= 2);
      CHECK(std::binary_search(oracle.begin(), oracle.end(), s));
    }
  }
}

TEST_CASE("edge-label multiset is invariant across max-weight spanning trees") {
  auto multiset_of = [](const std::vector<VertexSet>& labels,
                        const std::vector<std::pair<int, int>>& edges) {
    std::multiset<VertexSet> out;
    for (auto [i, j] : edges) out.insert(set_intersect(labels[i], labels[j]));
    return out;
  };

  int graphs_checked = 0;
  for (std::uint64_t seed = 0; seed < 150 && graphs_checked < 60; ++seed) {
    Graph g = random_chordal(9, 0.25 + 0.05 * (seed % 8), seed * 29 + 1);
    CliqueTree t = build_clique_tree(g);
    if (t.node_count() > 6) continue;  // keep the tree enumeration small
    ++graphs_checked;
    auto trees = all_max_weight_spanning_trees(t.labels);
    REQUIRE(!trees.empty());
    auto reference = multiset_of(t.labels, t.edges);
    for (const auto& tree : trees)
      CHECK(multiset_of(t.labels, tree) == reference);
  }
  CHECK(graphs_checked >= 30);
}

TEST_CASE("separator source comparison") {
  Graph p3 = path_graph(3);
  SeparatorComparison a = compare_separator_sources(p3, build_clique_tree(p3));
  CHECK(a.kappa == 1);
  CHECK(a.m_prime_matches_oracle);
  CHECK(a.missing_from_m2.empty());
  CHECK(a.extra_in_m2.empty());
  CHECK(a.family.m_double_prime == std::vector<VertexSet>{{1}});

  Graph tk = two_k4s();
  SeparatorComparison b = compare_separator_sources(tk, build_clique_tree(tk));
  CHECK(b.m_prime_matches_oracle);
  CHECK(b.family.m_double_prime == std::vector<VertexSet>{{2, 3, 4}});
  CHECK(b.family.oracle_minimal_separators == std::vector<VertexSet>{{2, 3, 4}});

  // the standing witness: M'' drops the nested separator {0,1}
  Graph nest = g_nest();
  SeparatorComparison c = compare_separator_sources(nest, build_clique_tree(nest));
  CHECK(c.m_prime_matches_oracle);
  CHECK(c.family.m_double_prime == std::vector<VertexSet>{{0}});
  CHECK(c.missing_from_m2 == std::vector<VertexSet>{{0, 1}});
  CHECK(c.extra_in_m2.empty());

  std::string json = comparison_to_json(nest, c);
  CHECK(json.find("\"graph_hash\"") != std::string::npos);
  CHECK(json.find("\"missing_from_m2\"") != std::string::npos);
  CHECK(json == comparison_to_json(nest, c));
}

TEST_CASE("distinct tree-edge labels equal the separator oracle") {
  for (int n = 2; n <= 6; ++n)
    for_each_connected_chordal(n, [&](const Graph& g) {
      CliqueTree t = build_clique_tree(g);
      auto labels = t.edges.empty() ? std::vector<VertexSet>{} : edge_labels(t);
      CHECK(distinct_sorted(labels) == brute_force_minimal_separators(g));
    });
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = random_ktree(11, 2 + static_cast<int>(seed % 3), seed * 41 + 3);
    CliqueTree t = build_clique_tree(g);
    CHECK(distinct_sorted(edge_labels(t)) == brute_force_minimal_separators(g));
  }
}
