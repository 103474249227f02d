#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/copies.hpp"
#include "turan/covering.hpp"

using namespace turan;

TEST_CASE("special covering union sizes") {
  Graph k3 = Graph::complete(3);
  SUBCASE("K3 covering K3") {
    Covering f = build_special_covering(k3, k3);
    CHECK(f.copies.size() == 3);
    Graph u = underlying_graph(f);
    CHECK(u.vertex_count() == 6);
    CHECK(u.edge_count() == 9);
    validate_covering(f);
  }
  SUBCASE("K3 covering P3") {
    Covering f = build_special_covering(k3, Graph::path(3));
    CHECK(f.copies.size() == 2);
    Graph u = underlying_graph(f);
    CHECK(u.vertex_count() == 5);
    CHECK(u.edge_count() == 6);
    validate_covering(f);
  }
  SUBCASE("K4 covering K3") {
    Covering f = build_special_covering(Graph::complete(4), k3);
    CHECK(f.copies.size() == 3);
    Graph u = underlying_graph(f);
    CHECK(u.vertex_count() == 9);
    CHECK(u.edge_count() == 18);
    validate_covering(f);
  }
}

TEST_CASE("underlying graph of sub-collections") {
  Covering f = build_special_covering(Graph::complete(3), Graph::complete(3));
  Graph single = underlying_graph(std::span<const Copy>(f.copies.data(), 1));
  CHECK(canonical_form(single) == canonical_form(Graph::complete(3)));
  // two copies of F^e(K3,K3) glue on adjacent H-edges and share one vertex
  Graph two = underlying_graph(std::span<const Copy>(f.copies.data(), 2));
  CHECK(two.vertex_count() == 5);
  CHECK(two.edge_count() == 6);
}

TEST_CASE("t_density examples") {
  Graph k3 = Graph::complete(3);
  SUBCASE("F^e(K3,K3) has density 2 at the full collection") {
    TDensity d = t_density(build_special_covering(k3, k3));
    CHECK_FALSE(d.infinite);
    CHECK(d.value == Rational(2));
    CHECK(d.witness.size() == 3);
  }
  SUBCASE("F^e(K3,P3)") {
    TDensity d = t_density(build_special_covering(k3, Graph::path(3)));
    CHECK(d.value == Rational(3, 2));
  }
  SUBCASE("Fano covering of K7 by 7 triangles") {
    Covering fano = fano_covering();
    validate_covering(fano);
    TDensity d = t_density(fano);
    CHECK(d.value == Rational(9, 2));
    CHECK(d.witness.size() == 7);  // attained by the full collection
  }
  SUBCASE("fewer than two copies is undefined") {
    Covering f = build_special_covering(k3, k3);
    f.copies.resize(1);
    CHECK_THROWS_AS(t_density(f), InputError);
  }
}

TEST_CASE("closed form equals direct density of the special covering") {
  for (const auto& t : oracle::graphs_up_to_iso(4, true)) {
    if (t.edge_count() < 2 || t.vertex_count() < 3) continue;
    if (!is_two_balanced(t)) continue;
    for (const auto& h : oracle::graphs_up_to_iso(4, true)) {
      if (h.edge_count() < 2) continue;
      CAPTURE(t.to_graph6());
      CAPTURE(h.to_graph6());
      TDensity d = t_density(build_special_covering(t, h));
      REQUIRE_FALSE(d.infinite);
      CHECK(d.value == fe_density_closed_form(t, h));
    }
  }
}

TEST_CASE("degenerate sub-collections get infinite density") {
  // two edge-disjoint paths P4 on the same four vertices
  Graph p4 = Graph::path(4);
  Covering f{p4, p4, 4, {}};
  Copy a, b;
  a.edges.set(pair_index(0, 1));
  a.edges.set(pair_index(1, 2));
  a.edges.set(pair_index(2, 3));
  a.vertices = 0xf;
  b.edges.set(pair_index(0, 2));
  b.edges.set(pair_index(0, 3));
  b.edges.set(pair_index(1, 3));
  b.vertices = 0xf;
  f.copies = {a, b};
  TDensity d = t_density(f);
  CHECK(d.infinite);
}

TEST_CASE("covering canonical form is a covering-isomorphism invariant") {
  Graph k3 = Graph::complete(3);
  Covering f = build_special_covering(k3, Graph::complete(4));
  // relabel the universe arbitrarily and shuffle copy order
  std::vector<int> perm(f.universe_size);
  for (int i = 0; i < f.universe_size; ++i) perm[i] = (i * 7 + 3) % f.universe_size;
  Covering g = f;
  for (auto& c : g.copies) {
    Copy r;
    c.edges.for_each([&](int idx) {
      auto [u, v] = pair_from_index(idx);
      r.edges.set(pair_index(perm[u], perm[v]));
    });
    for (int v = 0; v < f.universe_size; ++v)
      if ((c.vertices >> v) & 1u) r.vertices |= std::uint64_t(1) << perm[v];
    c = r;
  }
  std::rotate(g.copies.begin(), g.copies.begin() + 2, g.copies.end());
  CHECK(covering_canonical_form(f) == covering_canonical_form(g));
  CHECK(oracle::coverings_isomorphic(f.copies, g.copies));
  // and equality tracks the brute-force notion on genuinely different coverings
  Covering other = build_special_covering(k3, Graph::complete(3));
  CHECK(covering_canonical_form(f) != covering_canonical_form(other));
  CHECK_FALSE(oracle::coverings_isomorphic(f.copies, other.copies));
}

TEST_CASE("enumerate_covering_types matches the gluing oracle") {
  Graph k3 = Graph::complete(3);
  SUBCASE("(K3, P3): singleton plus F^e") {
    auto list = enumerate_covering_types(k3, Graph::path(3));
    auto expect = oracle::covering_types_bruteforce(k3, Graph::path(3));
    CHECK(list.types.size() == expect.types.size());
    CHECK(list.singletons.size() == expect.singletons.size());
    CHECK(list.types.size() == 1);
    CHECK(list.singletons.size() == 1);
    CHECK(list.types[0].copy_count == 2);
  }
  SUBCASE("(K3, K3): singleton plus F^e, no k=2 type") {
    auto list = enumerate_covering_types(k3, k3);
    auto expect = oracle::covering_types_bruteforce(k3, k3);
    CHECK(list.types.size() == expect.types.size());
    CHECK(list.singletons.size() == expect.singletons.size());
    CHECK(list.types.size() == 1);
    CHECK(list.types[0].copy_count == 3);
    CHECK(list.singletons.size() == 1);
  }
  SUBCASE("(K3, K4): full list agrees with the oracle, includes F^e") {
    auto list = enumerate_covering_types(k3, Graph::complete(4));
    auto expect = oracle::covering_types_bruteforce(k3, Graph::complete(4));
    REQUIRE(list.types.size() == expect.types.size());
    CHECK(list.singletons.empty());
    // every oracle type is hit exactly once
    for (const auto& rep : expect.types) {
      int hits = 0;
      for (const auto& ty : list.types)
        if (oracle::coverings_isomorphic(rep, ty.representative.copies)) ++hits;
      CHECK(hits == 1);
    }
    std::string fe = covering_canonical_form(
        build_special_covering(k3, Graph::complete(4)));
    bool has_fe = false;
    for (const auto& ty : list.types) has_fe |= ty.canonical == fe;
    CHECK(has_fe);
    for (const auto& ty : list.types) {
      REQUIRE_FALSE(ty.density.infinite);
      CHECK(ty.density.value > Rational(2));  // regime m2(H) > m2(T)
    }
  }
}

TEST_CASE("enumeration is invariant under relabeling the inputs") {
  Graph h(4);
  h.add_edge(0, 1);
  h.add_edge(1, 2);
  h.add_edge(2, 3);
  h.add_edge(3, 0);
  h.add_edge(0, 2);  // C4 plus a chord
  Graph h2(4);
  h2.add_edge(2, 3);
  h2.add_edge(3, 0);
  h2.add_edge(0, 1);
  h2.add_edge(1, 2);
  h2.add_edge(3, 1);
  auto canon_list = [](const CoveringTypeList& l) {
    std::vector<std::string> out;
    for (const auto& ty : l.types) out.push_back(ty.canonical);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto a = enumerate_covering_types(Graph::complete(3), h);
  auto b = enumerate_covering_types(Graph::complete(3), h2);
  CHECK(canon_list(a) == canon_list(b));
}

TEST_CASE("density cap prunes exactly") {
  Graph k3 = Graph::complete(3), k4 = Graph::complete(4);
  auto full = enumerate_covering_types(k3, k4);
  Rational cap = fe_density_closed_form(k3, k4);
  EnumerationOptions opts;
  opts.density_cap = cap;
  auto capped = enumerate_covering_types(k3, k4, opts);
  std::size_t expected = 0;
  for (const auto& ty : full.types)
    if (!ty.density.infinite && ty.density.value <= cap) ++expected;
  CHECK(capped.types.size() == expected);
  for (const auto& ty : capped.types) CHECK(ty.density.value <= cap);
}

TEST_CASE("t_resolution of (K3, K4)") {
  Graph k3 = Graph::complete(3), k4 = Graph::complete(4);
  Resolution res = t_resolution(k3, k4);
  REQUIRE_FALSE(res.types.empty());
  CHECK(res.base_exponent == Rational(1));
  CHECK(res.fe_index >= 0);
  CHECK(res.fe_type.density.value == Rational(15, 7));
  for (std::size_t i = 0; i + 1 < res.densities.size(); ++i)
    CHECK(res.densities[i] <= res.densities[i + 1]);
  for (std::size_t i = 0; i < res.densities.size(); ++i) {
    CHECK(res.densities[i] <= Rational(15, 7));
    CHECK(res.densities[i] > Rational(2));  // lemma instance for this pair
    CHECK(res.threshold_exponents[i] == res.densities[i].reciprocal());
  }
}

TEST_CASE("t_resolution preconditions") {
  Graph k3 = Graph::complete(3);
  Graph k3_pendant(4);
  k3_pendant.add_edge(0, 1);
  k3_pendant.add_edge(0, 2);
  k3_pendant.add_edge(1, 2);
  k3_pendant.add_edge(2, 3);
  CHECK_THROWS_WITH_AS(t_resolution(k3_pendant, Graph::complete(5)),
                       "T must be 2-balanced", InputError);
  CHECK_THROWS_WITH_AS(t_resolution(k3, Graph::path(3)),
                       "H must not be contained in a blow-up of T", InputError);
  CHECK_THROWS_AS(t_resolution(k3, Graph::cycle(4)), InputError);  // bipartite H
}

TEST_CASE("count_covering_instances") {
  Graph k3 = Graph::complete(3);
  auto fe_type = [&](const Graph& h) {
    EnumerationOptions opts;
    opts.density_cap = fe_density_closed_form(k3, h);
    auto list = enumerate_covering_types(k3, h, opts);
    std::string canon = covering_canonical_form(build_special_covering(k3, h));
    for (const auto& ty : list.types)
      if (ty.canonical == canon) return ty;
    REQUIRE(false);
    return list.types[0];
  };
  SUBCASE("F^e(K3,K3) needs six vertices, so K5 holds none") {
    auto pool = enumerate_copies(k3, Graph::complete(5));
    CHECK(count_covering_instances(fe_type(k3), pool) == 0);
  }
  SUBCASE("F^e(K3,K3) instances in K6 count placements") {
    auto pool = enumerate_copies(k3, Graph::complete(6));
    // 20 base triangles, 3! ways to attach the three fresh apexes
    CHECK(count_covering_instances(fe_type(k3), pool) == 120);
  }
  SUBCASE("empty pool") {
    CHECK(count_covering_instances(fe_type(k3), {}) == 0);
  }
  SUBCASE("Fano instances in T(K7) are the 30 triangle decompositions") {
    Covering fano = fano_covering();
    CoveringType ty;
    ty.canonical = covering_canonical_form(fano);
    ty.copy_count = 7;
    ty.union_vertices = 7;
    ty.union_edges = 21;
    ty.representative = fano;
    auto pool = enumerate_copies(k3, Graph::complete(7));
    REQUIRE(pool.size() == 35);
    long long via_search = count_covering_instances(ty, pool);
    CHECK(via_search == 30);
    CHECK(via_search == oracle::fano_decomposition_count());
  }
}

TEST_CASE("crossing triangles are Fano-free") {
  auto pool = crossing_triangles(7);
  CHECK(pool.size() == 30);  // 35 - C(4,3) - C(3,3)
  Covering fano = fano_covering();
  CoveringType ty;
  ty.canonical = covering_canonical_form(fano);
  ty.copy_count = 7;
  ty.union_vertices = 7;
  ty.union_edges = 21;
  ty.representative = fano;
  CHECK(count_covering_instances(ty, pool) == 0);
}

TEST_CASE("covering validation rejects broken inputs") {
  Graph k3 = Graph::complete(3);
  Covering f = build_special_covering(k3, k3);
  SUBCASE("shared edge") {
    Covering bad = f;
    bad.copies[1] = bad.copies[0];
    CHECK_THROWS_AS(validate_covering(bad), InputError);
  }
  SUBCASE("unused universe vertex") {
    Covering bad = f;
    bad.universe_size += 1;
    CHECK_THROWS_AS(validate_covering(bad), InputError);
  }
  SUBCASE("union missing the target") {
    Covering bad = f;
    bad.target = Graph::complete(4);
    CHECK_THROWS_AS(validate_covering(bad), InputError);
  }
  SUBCASE("copy not isomorphic to the pattern") {
    Covering bad = f;
    bad.pattern = Graph::path(3);
    CHECK_THROWS_AS(validate_covering(bad), InputError);
  }
}
