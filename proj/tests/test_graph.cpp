#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "chordal/generators.hpp"
#include "chordal/graph.hpp"
#include "chordal/graph_io.hpp"

#include "test_util.hpp"

using namespace chordal;
using namespace testutil;

TEST_CASE("edge normalization") {
  Edge e(3, 1);
  CHECK(e.u == 1);
  CHECK(e.v == 3);
  CHECK(Edge(1, 3) == e);
  CHECK_THROWS_AS(Edge(2, 2), InvalidEdgeError);
}

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // idempotent
  g.add_edge(2, 1);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.neighbors(1) == VertexSet{0, 2});
  CHECK(g.degree(3) == 0);
  CHECK_THROWS_AS(g.add_edge(1, 1), ValidationError);
  CHECK_THROWS_AS(g.add_edge(0, 4), RangeError);
  CHECK_THROWS_AS(g.neighbors(-1), RangeError);
  CHECK(complete_graph(4).is_complete());
  CHECK_FALSE(path_graph(3).is_complete());
}

TEST_CASE("edge list parsing") {
  Graph tri = parse_graph(std::string("0 1\n1 2\n0 2\n"), GraphFormat::edge_list);
  CHECK(tri == complete_graph(3));

  Graph dup = parse_graph(std::string("# comment\n\n0 1\n0 1\n"), GraphFormat::edge_list);
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(parse_graph(std::string("0 0\n"), GraphFormat::edge_list), ValidationError);
  CHECK_THROWS_AS(parse_graph(std::string("0\n"), GraphFormat::edge_list), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("0 1 2\n"), GraphFormat::edge_list), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("a b\n"), GraphFormat::edge_list), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("-1 2\n"), GraphFormat::edge_list), ParseError);

  // empty input is the empty graph
  CHECK(parse_graph(std::string(""), GraphFormat::edge_list).vertex_count() == 0);
}

TEST_CASE("dimacs parsing") {
  Graph p3 = parse_graph(std::string("p edge 3 2\ne 1 2\ne 2 3\n"), GraphFormat::dimacs);
  CHECK(p3 == path_graph(3));

  // header fixes the vertex count, isolated vertices survive
  Graph iso = parse_graph(std::string("c comment\np edge 5 1\ne 1 2\n"), GraphFormat::dimacs);
  CHECK(iso.vertex_count() == 5);
  CHECK(iso.edge_count() == 1);

  CHECK_THROWS_AS(parse_graph(std::string("e 1 2\n"), GraphFormat::dimacs), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("p edge 2 1\ne 1 3\n"), GraphFormat::dimacs),
                  RangeError);
  CHECK_THROWS_AS(parse_graph(std::string("p edge 2 1\ne 1 1\n"), GraphFormat::dimacs),
                  ValidationError);
  CHECK_THROWS_AS(parse_graph(std::string("p edge 2 1\nq 1 2\n"), GraphFormat::dimacs),
                  ParseError);
  CHECK_THROWS_AS(parse_graph(std::string(""), GraphFormat::dimacs), ParseError);
}

TEST_CASE("serialization round-trips") {
  // dimacs carries the vertex count, so every graph round-trips
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_connected_graph(2 + static_cast<int>(seed % 9), 0.4, seed);
    CHECK(parse_graph(serialize_graph(g, GraphFormat::dimacs), GraphFormat::dimacs) == g);
    // edge-list infers n = max id + 1; these graphs have no isolated tail
    CHECK(parse_graph(serialize_graph(g, GraphFormat::edge_list), GraphFormat::edge_list) == g);
  }
  Graph lone = parse_graph(std::string("p edge 3 1\ne 1 2\n"), GraphFormat::dimacs);
  CHECK(parse_graph(serialize_graph(lone, GraphFormat::dimacs), GraphFormat::dimacs) == lone);
}

TEST_CASE("contraction examples") {
  // complete graphs shrink to the next smaller complete graph
  Graph k4 = complete_graph(4);
  for (const Edge& e : k4.edges()) CHECK(contract_edge(k4, e).graph == complete_graph(3));

  ContractionResult p = contract_edge(path_graph(3), Edge(0, 1));
  CHECK(p.graph == complete_graph(2));
  CHECK(p.merged_vertex == 0);
  CHECK(p.vertex_map == std::vector<int>{0, 0, 1});

  CHECK_THROWS_AS(contract_edge(path_graph(3), Edge(0, 2)), InvalidEdgeError);
}

TEST_CASE("contracting an apex edge of the shared-triangle graph gives K4") {
  Graph g = two_k4s();
  ContractionResult r = contract_edge(g, Edge(0, 2));
  CHECK(r.graph == definitional_contract(g, Edge(0, 2)));
  CHECK(r.graph == complete_graph(4));
}

TEST_CASE("contraction matches the definitional oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_connected_graph(3 + static_cast<int>(seed % 6), 0.45, seed * 31 + 1);
    for (const Edge& e : g.edges()) {
      ContractionResult r = contract_edge(g, e);
      CHECK(r.graph == definitional_contract(g, e));
      CHECK(r.graph.vertex_count() == g.vertex_count() - 1);

      // vertex_map is onto the new id range and both endpoints merge
      std::set<int> image(r.vertex_map.begin(), r.vertex_map.end());
      CHECK(static_cast<int>(image.size()) == r.graph.vertex_count());
      CHECK(r.vertex_map[e.u] == r.merged_vertex);
      CHECK(r.vertex_map[e.v] == r.merged_vertex);

      // adjacency not involving the endpoints is preserved
      for (const Edge& other : g.edges()) {
        if (other.u == e.u || other.u == e.v || other.v == e.u || other.v == e.v) continue;
        CHECK(r.graph.has_edge(r.vertex_map[other.u], r.vertex_map[other.v]));
      }
    }
  }
}

TEST_CASE("induced deletion") {
  CHECK(induced_delete(complete_graph(4), {0}).graph == complete_graph(3));

  InducedDeleteResult cut = induced_delete(path_graph(3), {1});
  CHECK(cut.graph.vertex_count() == 2);
  CHECK(cut.graph.edge_count() == 0);
  CHECK(connected_components(cut.graph).size() == 2);

  InducedDeleteResult tri = induced_delete(two_k4s(), {2, 3, 4});
  CHECK(tri.graph.vertex_count() == 2);
  CHECK(tri.graph.edge_count() == 0);

  CHECK_THROWS_AS(induced_delete(path_graph(3), {7}), RangeError);

  // deleting nothing is the identity
  InducedDeleteResult same = induced_delete(two_k4s(), {});
  CHECK(same.graph == two_k4s());
  for (int v = 0; v < 5; ++v) CHECK(same.vertex_map[v] == v);

  // oracle: adjacency filter
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_connected_graph(6, 0.5, seed + 100);
    VertexSet s{1, 4};
    InducedDeleteResult r = induced_delete(g, s);
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) {
        if (set_contains(s, u) || set_contains(s, v)) continue;
        CHECK(r.graph.has_edge(r.vertex_map[u], r.vertex_map[v]) == g.has_edge(u, v));
      }
  }
}

TEST_CASE("neighborhood and components") {
  CHECK(neighborhood(complete_graph(4), 0) == VertexSet{1, 2, 3});
  CHECK(neighborhood(path_graph(3), 1) == VertexSet{0, 2});
  CHECK(neighborhood(two_k4s(), 0) == VertexSet{2, 3, 4});

  CHECK(connected_components(complete_graph(4)) ==
        std::vector<VertexSet>{{0, 1, 2, 3}});
  CHECK(connected_components(Graph(2)) == std::vector<VertexSet>{{0}, {1}});
  CHECK(connected_components(Graph(0)).empty());
  CHECK(is_connected(path_graph(5)));
  CHECK_FALSE(is_connected(Graph(0)));
}

TEST_CASE("simplicial vertices") {
  for (int v = 0; v < 4; ++v) CHECK(is_simplicial(complete_graph(4), v));
  CHECK_FALSE(is_simplicial(path_graph(3), 1));
  CHECK(is_simplicial(path_graph(3), 0));
  CHECK(is_simplicial(two_k4s(), 0));
  CHECK_FALSE(is_simplicial(two_k4s(), 2));
}

TEST_CASE("graph hash is stable and content-sensitive") {
  CHECK(graph_hash(two_k4s()) == graph_hash(two_k4s()));
  CHECK(graph_hash(path_graph(3)) != graph_hash(complete_graph(3)));
  CHECK(graph_hash(Graph(3)) != graph_hash(Graph(4)));
}
