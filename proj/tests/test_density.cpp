#include <doctest.h>

#include "oracles.hpp"
#include "turan/copies.hpp"
#include "turan/density.hpp"

using namespace turan;

namespace {

Graph k3_pendant() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST_CASE("two_density golden values") {
  CHECK(two_density(Graph::complete(3)).value == Rational(2));
  CHECK(two_density(Graph::complete(4)).value == Rational(5, 2));
  CHECK(two_density(Graph::cycle(4)).value == Rational(3, 2));
  CHECK(two_density(Graph::complete_bipartite(3, 3)).value == Rational(2));
  CHECK(two_density(k3_pendant()).value == Rational(2));
  CHECK(two_density(Graph::cycle(5)).value == Rational(4, 3));
}

TEST_CASE("two_density witnesses attain the value") {
  for (const auto& h : oracle::graphs_up_to_iso(5, true)) {
    if (h.edge_count() < 2) continue;
    DensityReport rep = two_density(h);
    const Graph& w = rep.witness;
    CHECK(Rational(w.edge_count() - 1, w.vertex_count() - 2) == rep.value);
    CHECK(contains_subgraph(w, h));
  }
  // K_{3,3}'s maximum is attained by the whole graph
  DensityReport rep = two_density(Graph::complete_bipartite(3, 3));
  CHECK(rep.witness.vertex_count() == 6);
  CHECK(rep.witness.edge_count() == 9);
}

TEST_CASE("two_density equals the blind enumeration oracle") {
  for (int v = 3; v <= 5; ++v)
    for (const auto& h : oracle::graphs_up_to_iso(v, false)) {
      if (h.edge_count() < 2) continue;
      CAPTURE(h.to_graph6());
      CHECK(two_density(h).value == oracle::two_density_bruteforce(h));
    }
}

TEST_CASE("two_density rejects graphs without two edges") {
  CHECK_THROWS_AS(two_density(Graph::complete(2)), InputError);
  CHECK_THROWS_AS(two_density(Graph(5)), InputError);
  CHECK_THROWS_AS(is_two_balanced(Graph::complete(2)), InputError);
}

TEST_CASE("2-balancedness") {
  CHECK(is_two_balanced(Graph::complete(3)));
  CHECK(is_two_balanced(Graph::complete(4)));
  CHECK(is_two_balanced(Graph::cycle(5)));
  CHECK(is_two_balanced(Graph::complete_bipartite(3, 3)));
  CHECK(is_two_balanced(Graph::path(4)));  // trees sit at density 1
  CHECK_FALSE(is_two_balanced(k3_pendant()));
}

TEST_CASE("two_density monotone under subgraphs") {
  Graph k5 = Graph::complete(5);
  Rational whole = two_density(k5).value;
  for (const auto& h : oracle::graphs_up_to_iso(5, false)) {
    if (h.edge_count() < 2) continue;
    if (!contains_subgraph(h, k5)) continue;
    CHECK(two_density(h).value <= whole);
  }
}

TEST_CASE("fe density closed form values") {
  Graph k3 = Graph::complete(3);
  CHECK(fe_density_closed_form(k3, k3) == Rational(2));
  CHECK(fe_density_closed_form(k3, Graph::path(3)) == Rational(3, 2));
  CHECK(fe_density_closed_form(k3, Graph::complete(4)) == Rational(15, 7));
  CHECK_THROWS_AS(fe_density_closed_form(Graph::complete(2), k3), InputError);
}

TEST_CASE("fe density sits strictly between the 2-densities") {
  // for 2-balanced t and m2(h) < m2(t): m2(h) < m_T(F^e) < m2(t)
  for (const auto& t : oracle::graphs_up_to_iso(5, true)) {
    if (t.edge_count() < 2 || t.vertex_count() < 3) continue;
    if (!is_two_balanced(t)) continue;
    for (const auto& h : oracle::graphs_up_to_iso(4, true)) {
      if (h.edge_count() < 2) continue;
      Rational mh = two_density(h).value;
      Rational mt = two_density(t).value;
      if (mh > mt) continue;
      Rational fe = fe_density_closed_form(t, h);
      CHECK(fe <= mt);
      if (mh < mt) {
        CHECK(mh < fe);
        CHECK(fe < mt);
      }
    }
  }
}

TEST_CASE("exponent utilities") {
  CHECK(threshold_exponent(Rational(2)) == Rational(1, 2));
  CHECK(threshold_exponent(Rational(15, 7)) == Rational(7, 15));
  // the F^e entry of (K3, P3) sits at p = n^{-2/3}
  CHECK(threshold_exponent(fe_density_closed_form(Graph::complete(3), Graph::path(3))) ==
        Rational(2, 3));
  CHECK(appearance_exponent(Graph::complete(3)) == Rational(1));
  CHECK(appearance_exponent(Graph::cycle(4)) == Rational(1));
  CHECK(appearance_exponent(Graph::complete(4)) == Rational(2, 3));
  CHECK_THROWS_AS(threshold_exponent(Rational(0)), InputError);
  CHECK_THROWS_AS(appearance_exponent(Graph(3)), InputError);
}
