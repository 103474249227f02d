#include <doctest.h>

#include "oracles.hpp"
#include "turan/graph.hpp"

using namespace turan;

TEST_CASE("pair indexing matches the upper-triangle order") {
  CHECK(pair_index(0, 1) == 0);
  CHECK(pair_index(0, 2) == 1);
  CHECK(pair_index(1, 2) == 2);
  CHECK(pair_index(0, 3) == 3);
  CHECK(pair_index(3, 1) == pair_index(1, 3));
  for (int idx = 0; idx < pair_count(20); ++idx) {
    auto [u, v] = pair_from_index(idx);
    CHECK(u < v);
    CHECK(pair_index(u, v) == idx);
  }
}

TEST_CASE("basic graph invariants") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 4), InputError);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), InputError);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_isolated());
  CHECK(g.without_isolated().vertex_count() == 2);
}

TEST_CASE("graph6 round trip and known encodings") {
  CHECK(Graph::complete(4).to_graph6() == "C~");
  CHECK(Graph::complete(5).to_graph6() == "D~{");
  CHECK(Graph::from_graph6("C~") == Graph::complete(4));
  for (const auto& g : oracle::all_labeled_graphs(5))
    CHECK(Graph::from_graph6(g.to_graph6()) == g);
  // long form kicks in above 62 vertices
  Graph big(63);
  big.add_edge(0, 62);
  CHECK(Graph::from_graph6(big.to_graph6()) == big);
  CHECK_THROWS_AS(Graph::from_graph6(""), InputError);
  CHECK_THROWS_AS(Graph::from_graph6("C"), InputError);
  CHECK_THROWS_AS(Graph::from_graph6("C~~"), InputError);
  CHECK_THROWS_AS(Graph::from_graph6("\x01~"), InputError);
}

TEST_CASE("edge list text form") {
  Graph c4 = Graph::from_edge_list("4; 0-1,1-2,2-3,0-3");
  CHECK(c4 == Graph::cycle(4));
  CHECK(Graph::from_edge_list(c4.to_edge_list()) == c4);
  CHECK(Graph::from_edge_list("3;").edge_count() == 0);
  CHECK_THROWS_AS(Graph::from_edge_list("4: 0-1"), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list("4; 0-0"), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list("4; 0-9"), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list("4; 0-1,0-1"), InputError);
}

TEST_CASE("named builtin graphs") {
  CHECK(named_graph("K4")->edge_count() == 6);
  CHECK(named_graph("C5")->edge_count() == 5);
  CHECK(named_graph("P3")->edge_count() == 2);
  CHECK(named_graph("K33")->edge_count() == 9);
  CHECK(named_graph("Petersen")->edge_count() == 15);
  CHECK(named_graph("petersen")->vertex_count() == 10);
  for (int v = 0; v < 10; ++v) CHECK(named_graph("Petersen")->degree(v) == 3);
  CHECK_FALSE(named_graph("K9").has_value());
  CHECK_FALSE(named_graph("Q3").has_value());
}

TEST_CASE("edge bits order matches sorted edge-list order") {
  EdgeBits a, b;
  a.set(0);
  a.set(5);
  a.set(9);
  b.set(1);
  b.set(2);
  b.set(3);
  CHECK(edge_bits_less(a, b));  // {0,5,9} before {1,2,3}
  CHECK_FALSE(edge_bits_less(b, a));
  CHECK_FALSE(edge_bits_less(a, a));
  CHECK(a.count() == 3);
  CHECK((a | b).count() == 6);
  CHECK_FALSE(a.intersects(b));
  b.set(5);
  CHECK(a.intersects(b));
}
