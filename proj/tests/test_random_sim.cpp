#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "turan/copies.hpp"
#include "turan/random_sim.hpp"

using namespace turan;

TEST_CASE("gnp sampler endpoints and reproducibility") {
  CHECK(sample_gnp(8, 0.0, 1, 0).graph.edge_count() == 0);
  CHECK(sample_gnp(8, 1.0, 1, 0).graph == Graph::complete(8));
  Sample a = sample_gnp(20, 0.3, 99, 4);
  Sample b = sample_gnp(20, 0.3, 99, 4);
  CHECK(a.graph == b.graph);
  Sample c = sample_gnp(20, 0.3, 99, 5);
  CHECK_FALSE(a.graph == c.graph);
  Sample d = sample_gnp(20, 0.3, 100, 4);
  CHECK_FALSE(a.graph == d.graph);
  CHECK_THROWS_AS(sample_gnp(8, 1.5, 1, 0), InputError);
}

TEST_CASE("gnp edge counts match binomial statistics") {
  const int n = 50, trials = 1000;
  const double p = 0.3;
  double sum = 0.0;
  for (int i = 0; i < trials; ++i) sum += sample_gnp(n, p, 7, i).graph.edge_count();
  double mean = sum / trials;
  double expect = pair_count(n) * p;
  double sigma = std::sqrt(pair_count(n) * p * (1 - p) / trials);
  CHECK(std::abs(mean - expect) <= 3 * sigma);
}

TEST_CASE("extract_disjoint_core spec examples") {
  Graph k3 = Graph::complete(3);
  SUBCASE("two triangles sharing an edge collapse to nothing") {
    Graph g(4);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}})
      g.add_edge(u, v);
    CHECK(extract_disjoint_core(g, k3).edge_count() == 0);
  }
  SUBCASE("vertex-disjoint triangles survive unchanged") {
    Graph g(6);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
      g.add_edge(u, v);
    CHECK(extract_disjoint_core(g, k3) == g);
  }
  SUBCASE("K4 collapses: every edge lies in two triangles") {
    CHECK(extract_disjoint_core(Graph::complete(4), k3).edge_count() == 0);
  }
}

TEST_CASE("core invariant: every surviving edge in exactly one copy") {
  Graph k3 = Graph::complete(3);
  for (int trial = 0; trial < 50; ++trial) {
    Graph core = extract_disjoint_core(sample_gnp(20, 0.2, 11, trial).graph, k3);
    std::vector<int> cover(pair_count(20), 0);
    for (const auto& c : enumerate_copies(k3, core))
      c.edges.for_each([&](int e) { ++cover[e]; });
    for (auto [u, v] : core.edges()) CHECK(cover[pair_index(u, v)] == 1);
  }
}

TEST_CASE("lower_bound_easy") {
  Graph k3 = Graph::complete(3), k4 = Graph::complete(4);
  SUBCASE("H-free input is untouched") {
    Graph g = Graph::cycle(6);
    CHECK(lower_bound_easy(g, k3) == g);
  }
  SUBCASE("K4 host loses one edge, two triangles survive") {
    Graph out = lower_bound_easy(Graph::complete(4), k4);
    CHECK(out.edge_count() == 5);
    CHECK(count_copies(k3, out) == 2);
    CHECK_FALSE(contains_subgraph(k4, out));
  }
  SUBCASE("result is H-free over many samples") {
    for (int trial = 0; trial < 100; ++trial) {
      Graph g = sample_gnp(20, 0.2, 5, trial).graph;
      CHECK_FALSE(contains_subgraph(k4, lower_bound_easy(g, k4)));
    }
  }
  SUBCASE("deleting through a subgraph of H") {
    Graph g = sample_gnp(15, 0.3, 17, 0).graph;
    Graph out = lower_bound_easy(g, k4, k3);  // triangle-free is also K4-free
    CHECK_FALSE(contains_subgraph(k3, out));
    CHECK_FALSE(contains_subgraph(k4, out));
    CHECK_THROWS_AS(lower_bound_easy(g, k3, k4), InputError);
  }
}

TEST_CASE("lower_bound_resolution") {
  Graph k3 = Graph::complete(3), k7 = Graph::complete(7);
  SUBCASE("empty pool gives the empty graph") {
    auto out = lower_bound_resolution(Graph::complete(6), k3, Graph::complete(4), {});
    CHECK(out.graph.edge_count() == 0);
    CHECK(out.t_count == 0);
  }
  SUBCASE("full pool on an H-free host reduces to the plain core") {
    Graph g = sample_gnp(12, 0.15, 23, 2).graph;
    auto pool = enumerate_copies(k3, Graph::complete(12));
    auto out = lower_bound_resolution(g, k3, k7, pool);
    Graph expect = extract_disjoint_core(g, k3);
    // no K7 can appear, and every core copy is in the pool
    CHECK(out.graph == expect);
    CHECK(out.t_count == count_copies(k3, expect));
  }
  SUBCASE("crossing-triangle pool on K7 yields a K7-free restriction") {
    auto pool = crossing_triangles(7);
    auto out = lower_bound_resolution(k7, k3, k7, pool);
    CHECK_FALSE(contains_subgraph(k7, out.graph));
    for (const auto& c : enumerate_copies(k3, out.graph)) {
      bool in_pool = false;
      for (const auto& m : pool) in_pool |= m == c;
      CHECK(in_pool);
    }
  }
}

TEST_CASE("max_t_copies_h_free") {
  Graph k2 = Graph::complete(2), k3 = Graph::complete(3), k4 = Graph::complete(4);
  CHECK(max_t_copies_h_free(Graph::complete(5), k2, k3).value == 6);
  CHECK(max_t_copies_h_free(k4, k3, k4).value == 2);
  Graph c6 = Graph::cycle(6);
  auto res = max_t_copies_h_free(c6, k2, k3);
  CHECK(res.value == 6);  // already triangle-free: take everything
  CHECK(res.witness == c6);
  SUBCASE("guard: both edge and copy bounds exceeded") {
    Guards guards;
    guards.max_edges_sample_solver = 5;
    guards.max_h_copies = 2;
    CHECK_THROWS_AS(max_t_copies_h_free(Graph::complete(6), k3, k3, guards),
                    GuardError);
    // the H-copy bound alone admits the search
    guards.max_h_copies = 100;
    CHECK(max_t_copies_h_free(Graph::complete(6), k3, k4, guards).value == 8);
  }
}

TEST_CASE("lower bounds sandwich the exact solver") {
  Graph k3 = Graph::complete(3), k4 = Graph::complete(4);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = sample_gnp(12, 0.35, 31, trial).graph;
    long long exact = max_t_copies_h_free(g, k3, k4).value;
    CHECK(count_copies(k3, lower_bound_easy(g, k4)) <= exact);
    auto pool = enumerate_copies(k3, Graph::complete(12));
    CHECK(lower_bound_resolution(g, k3, k4, pool).t_count <= exact);
  }
  // at p = 1 the sample solver agrees with ex_exact
  CHECK(max_t_copies_h_free(Graph::complete(7), k3, k4).value ==
        ex_exact(7, k3, k4).value);
}

TEST_CASE("concentration_check") {
  Graph k3 = Graph::complete(3);
  auto flat = concentration_check(k3, 12, 1.0, 5, 1);
  CHECK(flat.ratio == doctest::Approx(1.0));
  CHECK(flat.stddev == 0.0);
  auto zero = concentration_check(k3, 12, 0.0, 5, 1);
  CHECK(zero.mean == 0.0);
  auto st = concentration_check(k3, 60, 0.15, 100, 3);
  CHECK(st.ratio > 0.9);
  CHECK(st.ratio < 1.1);
}

TEST_CASE("phase_scan endpoints and reproducibility across threads") {
  Graph k3 = Graph::complete(3), k4 = Graph::complete(4);
  std::vector<Rational> exps{Rational(0), Rational(1, 2), Rational(3, 2)};
  SolverConfig cfg1{1, true};
  auto scan1 = phase_scan(k3, k4, 8, exps, 6, 42, Guards{}, cfg1);
  REQUIRE(scan1.rows.size() == 3);
  // p = 1 row is deterministic and matches ex_exact / n^{v_T}
  CHECK(scan1.rows[0].p == 1.0);
  CHECK(scan1.rows[0].std_ex == 0.0);
  CHECK(scan1.rows[0].mean_ex == double(ex_exact(8, k3, k4).value));
  CHECK(scan1.rows[0].normalized_pi ==
        doctest::Approx(double(ex_exact(8, k3, k4).value) / 512.0));
  // far above the appearance exponent nothing survives
  CHECK(scan1.rows[2].mean_ex <= 0.5);
  CHECK(scan1.have_resolution);

  SolverConfig cfg4{4, true};
  auto scan4 = phase_scan(k3, k4, 8, exps, 6, 42, Guards{}, cfg4);
  for (std::size_t i = 0; i < scan1.rows.size(); ++i) {
    CHECK(scan1.rows[i].mean_ex == scan4.rows[i].mean_ex);
    CHECK(scan1.rows[i].std_ex == scan4.rows[i].std_ex);
    CHECK(scan1.rows[i].mean_nt == scan4.rows[i].mean_nt);
    CHECK(scan1.rows[i].bound_only_trials == scan4.rows[i].bound_only_trials);
  }
}

TEST_CASE("phase_scan marks guard fallbacks as bound-only") {
  Graph k3 = Graph::complete(3), k4 = Graph::complete(4);
  Guards tight;
  tight.max_edges_sample_solver = 3;
  tight.max_h_copies = 0;
  std::vector<Rational> exps{Rational(0)};
  auto scan = phase_scan(k3, k4, 8, exps, 2, 1, tight, SolverConfig{});
  CHECK(scan.rows[0].bound_only_trials == 2);
  // the fallback is the greedy construction, a valid lower bound
  CHECK(scan.rows[0].mean_ex <= double(ex_exact(8, k3, k4).value));
  CHECK(scan.rows[0].mean_ex > 0.0);
}
