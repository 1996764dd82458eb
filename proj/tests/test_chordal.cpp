#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chordal/chordal.hpp"
#include "chordal/generators.hpp"

#include "test_util.hpp"

using namespace chordal;
using namespace testutil;

namespace {

// a chordless-cycle witness must be an induced cycle of length >= 4
void check_cycle_witness(const Graph& g, const std::vector<int>& cycle) {
  REQUIRE(cycle.size() >= 4);
  const int m = static_cast<int>(cycle.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
      CHECK(g.has_edge(cycle[i], cycle[j]) == consecutive);
    }
}

}  // namespace

TEST_CASE("mcs order is deterministic and complete") {
  Graph g = two_k4s();
  EliminationOrder a = mcs_order(g);
  EliminationOrder b = mcs_order(g);
  CHECK(a == b);
  CHECK(a.size() == 5);

  // reverse of the MCS order eliminates perfectly on chordal graphs
  EliminationOrder peo(a.rbegin(), a.rend());
  CHECK(is_perfect_elimination_order(g, peo));

  // any order of a complete graph is perfect
  CHECK(is_perfect_elimination_order(complete_graph(4), {2, 0, 3, 1}));
}

TEST_CASE("chordality verdicts") {
  CHECK(is_chordal(complete_graph(4)));
  CHECK(is_chordal(two_k4s()));
  CHECK(is_chordal(path_graph(6)));
  CHECK(is_chordal(star_graph(4)));
  CHECK(is_chordal(Graph(1)));
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK_FALSE(is_chordal(cycle_graph(6)));

  ChordalityResult c4 = check_chordal(cycle_graph(4));
  REQUIRE_FALSE(c4.chordal);
  CHECK(c4.violating_vertex >= 0);
  check_cycle_witness(cycle_graph(4), c4.chordless_cycle);
  CHECK(c4.chordless_cycle.size() == 4);

  ChordalityResult ok = check_chordal(two_k4s());
  REQUIRE(ok.chordal);
  CHECK(is_perfect_elimination_order(two_k4s(), ok.peo));
}

TEST_CASE("chordality agrees with induced-cycle search") {
  for (int n = 2; n <= 6; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      ChordalityResult res = check_chordal(g);
      CHECK(res.chordal == !has_induced_long_cycle(g));
      if (res.chordal)
        CHECK(is_perfect_elimination_order(g, res.peo));
      else
        check_cycle_witness(g, res.chordless_cycle);
    });
  }
  // spot-check n = 7 on random graphs
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    Graph g = random_connected_graph(7, 0.2 + 0.1 * (seed % 6), seed);
    ChordalityResult res = check_chordal(g);
    CHECK(res.chordal == !has_induced_long_cycle(g));
    if (!res.chordal) check_cycle_witness(g, res.chordless_cycle);
  }
}

TEST_CASE("maximal cliques of fixed graphs") {
  auto cliques_of = [](const Graph& g) {
    ChordalityResult c = check_chordal(g);
    REQUIRE(c.chordal);
    auto cl = maximal_cliques(g, c.peo);
    std::sort(cl.begin(), cl.end());
    return cl;
  };

  CHECK(cliques_of(complete_graph(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
  CHECK(cliques_of(path_graph(3)) == std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK(cliques_of(two_k4s()) == std::vector<VertexSet>{{0, 2, 3, 4}, {1, 2, 3, 4}});
  CHECK(cliques_of(g_nest()) == std::vector<VertexSet>{{0, 1, 2}, {0, 1, 3}, {0, 4}});
}

TEST_CASE("maximal cliques match subset enumeration") {
  for (int n = 2; n <= 6; ++n) {
    for_each_connected_chordal(n, [&](const Graph& g) {
      ChordalityResult c = check_chordal(g);
      auto cl = maximal_cliques(g, c.peo);
      CHECK(static_cast<int>(cl.size()) <= n);
      std::sort(cl.begin(), cl.end());
      CHECK(cl == bf_maximal_cliques(g));
    });
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_chordal(10, 0.1 * (seed % 10), seed);
    ChordalityResult c = check_chordal(g);
    REQUIRE(c.chordal);
    auto cl = maximal_cliques(g, c.peo);
    std::sort(cl.begin(), cl.end());
    CHECK(cl == bf_maximal_cliques(g));
  }
}

TEST_CASE("maximal cliques reject bad orders") {
  Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS(maximal_cliques(c4, mcs_order(c4)), DomainError);
  CHECK_THROWS_AS(maximal_cliques(path_graph(3), {0, 0, 1}), DomainError);
  CHECK_THROWS_AS(maximal_cliques(path_graph(3), {0, 1}), DomainError);
}
