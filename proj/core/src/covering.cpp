#include "turan/covering.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "turan/canonical.hpp"
#include "turan/copies.hpp"
#include "turan/errors.hpp"

namespace turan {

Graph underlying_graph(std::span<const Copy> copies) {
  if (copies.empty()) throw InputError("underlying graph of an empty collection");
  std::uint64_t support = 0;
  EdgeBits all;
  for (const auto& c : copies) {
    support |= c.vertices;
    all |= c.edges;
  }
  std::array<int, kMaxVertices> remap{};
  int m = 0;
  for (int v = 0; v < kMaxVertices; ++v)
    if ((support >> v) & 1u) remap[v] = m++;
  Graph g(m);
  all.for_each([&](int idx) {
    auto [u, v] = pair_from_index(idx);
    g.add_edge(remap[u], remap[v]);
  });
  return g;
}

Graph underlying_graph(const Covering& f) {
  return underlying_graph(std::span<const Copy>(f.copies));
}

namespace {

// union graph on the covering's own universe labels (no compaction)
Graph union_on_universe(const Covering& f, int skip_index = -1) {
  Graph g(f.universe_size);
  for (int i = 0; i < int(f.copies.size()); ++i) {
    if (i == skip_index) continue;
    f.copies[i].edges.for_each([&](int idx) {
      auto [u, v] = pair_from_index(idx);
      if (!g.has_edge(u, v)) g.add_edge(u, v);
    });
  }
  return g;
}

}  // namespace

void validate_covering(const Covering& f) {
  if (f.copies.empty()) throw InputError("covering has no copies");
  std::string t_canon = canonical_form(f.pattern);
  EdgeBits seen;
  std::uint64_t support = 0;
  for (const auto& c : f.copies) {
    if (c.edges.intersects(seen))
      throw InputError("covering copies are not pairwise edge-disjoint");
    seen |= c.edges;
    support |= c.vertices;
    Graph cg = underlying_graph(std::span<const Copy>(&c, 1));
    if (canonical_form(cg) != t_canon)
      throw InputError("covering copy is not isomorphic to the pattern");
  }
  std::uint64_t universe_mask = f.universe_size == 64
                                    ? ~std::uint64_t(0)
                                    : (std::uint64_t(1) << f.universe_size) - 1;
  if (support != universe_mask)
    throw InputError("covering universe has unused vertices");
  Graph u = union_on_universe(f);
  auto placements = enumerate_copies(f.target, u);
  if (placements.empty())
    throw InputError("covering union does not contain the target");
  // minimality: some target placement is met edge-wise by every copy, so
  // dropping any copy destroys that placement
  bool minimal = false;
  for (const auto& pl : placements) {
    bool all_meet = true;
    for (const auto& c : f.copies)
      if (!c.edges.intersects(pl.edges)) {
        all_meet = false;
        break;
      }
    if (all_meet) {
      minimal = true;
      break;
    }
  }
  if (!minimal)
    throw InputError("covering is not minimal (some copy misses every placement)");
}

TDensity t_density(const Covering& f) {
  int k = int(f.copies.size());
  if (k < 2) throw InputError("T-density undefined for fewer than 2 copies");
  if (k > 20) throw GuardError("T-density sub-collection sweep refused beyond 20 copies");
  int vt = f.pattern.vertex_count();
  int et = f.pattern.edge_count();
  TDensity best;
  bool have = false;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::uint64_t support = 0;
    EdgeBits edges;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1u) {
        support |= f.copies[i].vertices;
        edges |= f.copies[i].edges;
      }
    int vu = std::popcount(support);
    int eu = edges.count();
    auto witness = [&] {
      std::vector<int> w;
      for (int i = 0; i < k; ++i)
        if ((mask >> i) & 1u) w.push_back(i);
      return w;
    };
    if (vu == vt) {
      // denominator degenerates; treated as +infinity, dominating everything
      return TDensity{true, Rational(), witness()};
    }
    Rational r(eu - et, vu - vt);
    if (!have || best.value < r) {
      have = true;
      best.value = r;
      best.witness = witness();
    }
  }
  return best;
}

Covering build_special_covering(const Graph& t, const Graph& h) {
  if (t.edge_count() < 1 || h.edge_count() < 1)
    throw InputError("special covering needs patterns with at least one edge");
  if (t.has_isolated() || h.has_isolated())
    throw InputError("special covering requires isolate-free graphs");
  int vt = t.vertex_count();
  int vh = h.vertex_count();
  auto hedges = h.edges();
  int eh = int(hedges.size());
  int universe = vh + eh * (vt - 2);
  if (universe > kMaxVertices)
    throw GuardError("special covering universe exceeds the vertex cap");

  auto [a0, b0] = t.edges().front();
  Covering f{t, h, universe, {}};
  for (int i = 0; i < eh; ++i) {
    std::array<int, kMaxVertices> img{};
    int fresh = vh + i * (vt - 2);
    for (int v = 0; v < vt; ++v) {
      if (v == a0)
        img[v] = hedges[i].first;
      else if (v == b0)
        img[v] = hedges[i].second;
      else
        img[v] = fresh++;
    }
    Copy c;
    for (auto [x, y] : t.edges()) c.edges.set(pair_index(img[x], img[y]));
    for (int v = 0; v < vt; ++v) c.vertices |= std::uint64_t(1) << img[v];
    f.copies.push_back(c);
  }
  return f;
}

std::string collection_canonical_form(std::span<const Copy> copies) {
  if (copies.empty()) throw InputError("canonical form of an empty collection");
  std::uint64_t support = 0;
  EdgeBits all;
  for (const auto& c : copies) {
    support |= c.vertices;
    all |= c.edges;
  }
  std::array<int, kMaxVertices> remap{};
  int m = 0;
  for (int v = 0; v < kMaxVertices; ++v)
    if ((support >> v) & 1u) remap[v] = m++;
  std::vector<int> edge_list = all.indices();
  int e = int(edge_list.size());
  int k = int(copies.size());
  int n = m + e + k;
  if (n > kMaxVertices)
    throw GuardError("covering canonical form: incidence graph exceeds vertex cap");
  // incidence encoding: support vertices, one node per union edge joined to
  // its endpoints, one node per copy joined to its edge nodes. A colored
  // isomorphism of this graph is exactly a covering isomorphism, and copy
  // order never enters.
  std::map<int, int> edge_node;
  Graph aux(n);
  for (int j = 0; j < e; ++j) {
    auto [u, v] = pair_from_index(edge_list[j]);
    edge_node[edge_list[j]] = m + j;
    aux.add_edge(remap[u], m + j);
    aux.add_edge(remap[v], m + j);
  }
  for (int c = 0; c < k; ++c) {
    copies[c].edges.for_each([&](int idx) {
      aux.add_edge(edge_node[idx], m + e + c);
    });
  }
  std::vector<int> colors(n, 0);
  for (int j = 0; j < e; ++j) colors[m + j] = 1;
  for (int c = 0; c < k; ++c) colors[m + e + c] = 2;
  return canonical_form_colored(aux, colors);
}

std::string covering_canonical_form(const Covering& f) {
  return collection_canonical_form(std::span<const Copy>(f.copies));
}

// ---------------------------------------------------------------------------
// Covering type enumeration.
//
// Fix the target on vertices {0..v_H-1}. In a minimal covering, every copy
// must contain an edge of every target placement inside the union (dropping
// the copy has to destroy all of them), so relative to the fixed placement
// the copies' target-edge sets partition E(H) into nonempty classes. The
// search enumerates those partitions (canonically under Aut(H)), then all
// ways of extending each class to a full pattern copy, with extra vertices
// drawn from the target, earlier copies, or a fresh pool in first-use order.

namespace {

struct Enumerator {
  const Graph& t;
  const Graph& h;
  EnumerationOptions opts;

  int vt, et, vh, eh;
  std::vector<std::pair<int, int>> hedges;
  std::vector<int> hedge_idx;              // pair index of target edge i
  EdgeBits h_bits;
  std::vector<std::vector<int>> aut_edge_perms;  // Aut(h) acting on edge positions
  std::vector<int> embed_order;            // pattern assignment order
  int max_universe;

  std::uint64_t nodes = 0;
  std::map<std::string, CoveringType> types;
  std::map<std::string, CoveringType> singletons;
  std::map<std::vector<int>, bool> class_feasible_memo;

  // With a density cap, two copies may share at most v_T - e_T/cap vertices
  // (the pair sub-collection would otherwise exceed the cap). Classes sit
  // inside their copies, so class supports obey the same bound, which prunes
  // partitions long before placement. -1 means "no two copies can coexist".
  int max_shared = kMaxVertices;

  // densest subgraph of the target (the 2-density witness): the classes
  // meeting its edges give a placement-independent lower bound on some
  // sub-collection density
  bool have_hprime = false;
  std::uint64_t hprime_mask = 0;
  int hprime_v = 0;
  std::vector<char> edge_in_hprime;

  // placement state
  std::vector<std::vector<int>> classes;   // current partition, edge positions
  std::vector<std::uint64_t> class_support;
  std::vector<EdgeBits> class_bits;
  std::vector<Copy> placed;
  EdgeBits used_bits;
  int universe = 0;

  Enumerator(const Graph& t_, const Graph& h_, const EnumerationOptions& o)
      : t(t_), h(h_), opts(o) {
    vt = t.vertex_count();
    et = t.edge_count();
    vh = h.vertex_count();
    hedges = h.edges();
    eh = int(hedges.size());
    for (auto [u, v] : hedges) hedge_idx.push_back(pair_index(u, v));
    for (int i : hedge_idx) h_bits.set(i);
    max_universe = std::min(kMaxVertices, vh + eh * std::max(0, vt - 2));

    if (opts.density_cap) {
      max_shared = -1;
      for (int s = vt - 1; s >= 0; --s)
        if ((long long)et * opts.density_cap->den() <=
            opts.density_cap->num() * (long long)(vt - s)) {
          max_shared = s;
          break;
        }
      if (eh >= 2 && vh <= 20) {
        Rational best;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << vh); ++mask) {
          int v = std::popcount(mask);
          if (v < 3) continue;
          int e = 0;
          for (auto [x, y] : hedges)
            if (((mask >> x) & 1u) && ((mask >> y) & 1u)) ++e;
          if (e < 2) continue;
          Rational r(e - 1, v - 2);
          if (!have_hprime || best < r) {
            have_hprime = true;
            best = r;
            hprime_mask = mask;
          }
        }
        hprime_v = std::popcount(hprime_mask);
        edge_in_hprime.assign(eh, 0);
        for (int i = 0; i < eh; ++i)
          edge_in_hprime[i] = ((hprime_mask >> hedges[i].first) & 1u) &&
                              ((hprime_mask >> hedges[i].second) & 1u);
      }
    }

    std::map<int, int> edge_pos;
    for (int i = 0; i < eh; ++i) edge_pos[hedge_idx[i]] = i;
    for_each_embedding(h, h, [&](const auto& img) {
      std::vector<int> per(eh);
      for (int i = 0; i < eh; ++i)
        per[i] = edge_pos.at(pair_index(img[hedges[i].first], img[hedges[i].second]));
      aut_edge_perms.push_back(std::move(per));
      return true;
    }, /*induced=*/true);
  }

  void tick() {
    if (++nodes > opts.node_budget)
      throw GuardError("covering enumeration budget exceeded");
  }

  bool class_feasible(const std::vector<int>& cls) {
    if (int(cls.size()) > et) return false;
    auto it = class_feasible_memo.find(cls);
    if (it != class_feasible_memo.end()) return it->second;
    std::uint64_t support = 0;
    for (int i : cls) {
      support |= std::uint64_t(1) << hedges[i].first;
      support |= std::uint64_t(1) << hedges[i].second;
    }
    std::array<int, kMaxVertices> remap{};
    int m = 0;
    for (int v = 0; v < vh; ++v)
      if ((support >> v) & 1u) remap[v] = m++;
    Graph cg(m);
    for (int i : cls) cg.add_edge(remap[hedges[i].first], remap[hedges[i].second]);
    bool ok = contains_subgraph(cg, t);
    class_feasible_memo.emplace(cls, ok);
    return ok;
  }

  // -- partition layer ------------------------------------------------------

  void run() {
    classes.reserve(eh);
    class_support.reserve(eh);
    embed_order = pattern_order();
    partition_rec(0);
  }

  std::uint64_t edge_support(int e) const {
    return (std::uint64_t(1) << hedges[e].first) |
           (std::uint64_t(1) << hedges[e].second);
  }

  bool support_compatible(std::uint64_t candidate, std::size_t skip) const {
    if (max_shared >= vt) return true;
    for (std::size_t j = 0; j < class_support.size(); ++j) {
      if (j == skip) continue;
      if (std::popcount(candidate & class_support[j]) > max_shared) return false;
    }
    return true;
  }

  // Largest achievable union for the whole collection: every target vertex
  // plus all-fresh extensions. Below the cap's requirement the partition is
  // dead no matter how the copies land.
  bool full_collection_feasible() const {
    if (!opts.density_cap || classes.size() < 2) return true;
    long long capacity = vh - vt;
    for (std::size_t i = 0; i < classes.size(); ++i)
      capacity += vt - std::popcount(class_support[i]);
    long long k = (long long)classes.size();
    return (k - 1) * et * opts.density_cap->den() <=
           opts.density_cap->num() * capacity;
  }

  // The copies whose classes meet E(H') span at most v_{H'} plus their
  // all-fresh extensions, so their density is at least (k'-1)e_T over that
  // capacity; past the cap the partition cannot place at all.
  bool hprime_bound_ok() const {
    if (!opts.density_cap || !have_hprime) return true;
    int k2 = 0;
    long long denom = hprime_v - vt;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      bool meets = false;
      for (int e : classes[i])
        if (edge_in_hprime[e]) {
          meets = true;
          break;
        }
      if (!meets) continue;
      ++k2;
      denom += vt - std::popcount(class_support[i] & hprime_mask);
    }
    if (k2 < 2) return true;
    if (denom <= 0) return false;
    return (long long)(k2 - 1) * et * opts.density_cap->den() <=
           opts.density_cap->num() * denom;
  }

  void partition_rec(int edge) {
    tick();
    if (edge == eh) {
      if (classes.size() >= 2 && max_shared < 0) return;
      if (!full_collection_feasible()) return;
      if (!hprime_bound_ok()) return;
      if (partition_is_canonical()) place_classes();
      return;
    }
    // index loop: deeper recursion appends to `classes`
    std::size_t existing = classes.size();
    for (std::size_t i = 0; i < existing; ++i) {
      std::uint64_t grown = class_support[i] | edge_support(edge);
      if (!support_compatible(grown, i)) continue;
      classes[i].push_back(edge);
      std::uint64_t saved = class_support[i];
      class_support[i] = grown;
      if (class_feasible(classes[i])) partition_rec(edge + 1);
      class_support[i] = saved;
      classes[i].pop_back();
    }
    std::uint64_t fresh = edge_support(edge);
    if (support_compatible(fresh, classes.size())) {
      classes.push_back({edge});
      class_support.push_back(fresh);
      partition_rec(edge + 1);
      class_support.pop_back();
      classes.pop_back();
    }
  }

  // Generated partitions are in restricted-growth form, which coincides with
  // the normalized encoding (classes sorted ascending, ordered by first
  // element). Keep a partition only if no target automorphism maps it to a
  // smaller encoding.
  bool partition_is_canonical() {
    for (const auto& per : aut_edge_perms) {
      std::vector<std::vector<int>> img;
      img.reserve(classes.size());
      for (const auto& cls : classes) {
        std::vector<int> c2;
        c2.reserve(cls.size());
        for (int i : cls) c2.push_back(per[i]);
        std::sort(c2.begin(), c2.end());
        img.push_back(std::move(c2));
      }
      std::sort(img.begin(), img.end());
      if (img < classes) return false;
    }
    return true;
  }

  // -- placement layer ------------------------------------------------------

  void place_classes() {
    class_bits.assign(classes.size(), EdgeBits{});
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (int e : classes[i]) class_bits[i].set(hedge_idx[e]);
    placed.clear();
    used_bits = h_bits;
    universe = vh;
    place_rec(0);
  }

  void place_rec(std::size_t class_index) {
    tick();
    if (class_index == classes.size()) {
      finish_candidate();
      return;
    }
    std::set<std::array<std::uint64_t, EdgeBits::kWords>> tried;
    embed_class(class_index, tried);
  }

  struct EmbedState {
    std::array<int, kMaxVertices> img{};
    std::uint64_t used_vertices = 0;
    std::uint64_t assigned = 0;  // pattern vertices already placed
    int next_fresh = 0;
    EdgeBits copy_edges;
  };

  // Placements of the pattern whose target-edge intersection is exactly the
  // class. Each embedding of the class graph into the pattern pins the
  // class's support; the remaining pattern vertices draw on existing
  // universe vertices or the next fresh one, so class coverage holds by
  // construction. Distinct edge images only (pattern automorphisms and
  // interchangeable fresh choices would otherwise repeat placements).
  void embed_class(std::size_t ci,
                   std::set<std::array<std::uint64_t, EdgeBits::kWords>>& tried) {
    std::vector<int> support;
    for (int v = 0; v < vh; ++v)
      if ((class_support[ci] >> v) & 1u) support.push_back(v);
    int s = int(support.size());
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < s; ++i) pos[support[i]] = i;
    Graph cg(s);
    for (int e : classes[ci])
      cg.add_edge(pos[hedges[e].first], pos[hedges[e].second]);

    for_each_embedding(cg, t, [&](const auto& into_t) {
      tick();
      EmbedState st;
      st.next_fresh = universe;
      bool ok = true;
      for (int x = 0; x < s; ++x) {
        st.img[into_t[x]] = support[x];
        st.assigned |= std::uint64_t(1) << into_t[x];
        st.used_vertices |= std::uint64_t(1) << support[x];
      }
      // pattern edges landing inside the pinned support; edges beyond the
      // class must avoid the target and anything already used
      for (auto [a, b] : t.edges()) {
        if (!((st.assigned >> a) & 1u) || !((st.assigned >> b) & 1u)) continue;
        int e = pair_index(st.img[a], st.img[b]);
        if (!class_bits[ci].test(e) && used_bits.test(e)) {
          ok = false;
          break;
        }
        st.copy_edges.set(e);
      }
      if (ok && shared_within_cap(st.used_vertices)) {
        std::vector<int> rest;
        for (int q : embed_order)
          if (!((st.assigned >> q) & 1u)) rest.push_back(q);
        embed_rec(ci, st, rest, 0, tried);
      }
      return true;
    });
  }

  // partial copies only grow, so exceeding the pairwise sharing bound against
  // any placed copy already kills the branch
  bool shared_within_cap(std::uint64_t partial_vertices) const {
    if (!opts.density_cap) return true;
    for (const auto& p : placed)
      if (std::popcount(partial_vertices & p.vertices) > max_shared) return false;
    return true;
  }

  std::vector<int> pattern_order() const {
    std::vector<int> order;
    std::vector<bool> done(vt, false);
    for (int step = 0; step < vt; ++step) {
      int best = -1, links = -1, deg = -1;
      for (int v = 0; v < vt; ++v) {
        if (done[v]) continue;
        int l = 0;
        for (int u : order)
          if (t.has_edge(u, v)) ++l;
        if (l > links || (l == links && t.degree(v) > deg)) {
          best = v;
          links = l;
          deg = t.degree(v);
        }
      }
      done[best] = true;
      order.push_back(best);
    }
    return order;
  }

  void embed_rec(std::size_t ci, EmbedState& st, const std::vector<int>& rest,
                 std::size_t level,
                 std::set<std::array<std::uint64_t, EdgeBits::kWords>>& tried) {
    tick();
    if (level == rest.size()) {
      if (!tried.insert(st.copy_edges.w).second) return;
      commit_copy(ci, st);
      return;
    }
    int q = rest[level];
    for (int c = 0; c <= universe; ++c) {
      bool fresh = (c == universe);
      if (fresh && (st.next_fresh >= max_universe || st.next_fresh >= kMaxVertices))
        break;
      int image = fresh ? st.next_fresh : c;
      if (!fresh && ((st.used_vertices >> image) & 1u)) continue;

      // check edges toward already-assigned pattern vertices
      EdgeBits added;
      bool ok = true;
      std::uint64_t nbrs = t.neighbors(q) & st.assigned;
      while (nbrs && ok) {
        int p2 = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        int e = pair_index(image, st.img[p2]);
        // class edges live between pinned vertices, so any new edge touching
        // the target or an earlier copy is a collision
        if (used_bits.test(e) || st.copy_edges.test(e))
          ok = false;
        else
          added.set(e);
      }
      if (!ok) continue;
      if (!fresh && !shared_within_cap(st.used_vertices | (std::uint64_t(1) << image)))
        continue;

      st.img[q] = image;
      st.assigned |= std::uint64_t(1) << q;
      st.used_vertices |= std::uint64_t(1) << image;
      st.copy_edges |= added;
      int saved_fresh = st.next_fresh;
      if (fresh) ++st.next_fresh;

      embed_rec(ci, st, rest, level + 1, tried);

      st.next_fresh = saved_fresh;
      added.for_each([&](int e) { st.copy_edges.reset(e); });
      st.used_vertices &= ~(std::uint64_t(1) << image);
      st.assigned &= ~(std::uint64_t(1) << q);
      if (fresh) break;  // only one fresh choice per level
    }
  }

  void commit_copy(std::size_t ci, const EmbedState& st) {
    Copy c;
    c.edges = st.copy_edges;
    for (int v = 0; v < vt; ++v) c.vertices |= std::uint64_t(1) << st.img[v];

    if (opts.density_cap) {
      // a placed copy contains its class's support, so it must also keep its
      // distance from every future class
      for (std::size_t j = ci + 1; j < classes.size(); ++j)
        if (std::popcount(c.vertices & class_support[j]) > max_shared) return;
    }
    if (opts.density_cap && !placed.empty()) {
      // every sub-collection containing the new copy must respect the cap;
      // earlier sub-collections were checked when their last copy landed
      int j = int(placed.size());
      for (std::uint32_t mask = 1; mask < (1u << j); ++mask) {
        std::uint64_t support = c.vertices;
        for (int i = 0; i < j; ++i)
          if ((mask >> i) & 1u) support |= placed[i].vertices;
        int vu = std::popcount(support);
        int members = std::popcount(mask) + 1;
        if (vu == vt) return;  // infinite density, fails any cap
        // (members*et - et) / (vu - vt) > cap ?
        long long lhs = (long long)(members - 1) * et * opts.density_cap->den();
        long long rhs = opts.density_cap->num() * (long long)(vu - vt);
        if (lhs > rhs) return;
      }
    }

    int saved_universe = universe;
    EdgeBits saved_used = used_bits;
    placed.push_back(c);
    used_bits |= c.edges;
    universe = std::max(universe, highest_vertex(c.vertices) + 1);

    place_rec(ci + 1);

    placed.pop_back();
    used_bits = saved_used;
    universe = saved_universe;
  }

  static int highest_vertex(std::uint64_t mask) {
    return 63 - std::countl_zero(mask);
  }

  // -- leaf -----------------------------------------------------------------

  void finish_candidate() {
    // every copy holds an edge of the fixed placement by construction, which
    // is exactly the minimality requirement
    Covering cand{t, h, universe, placed};
    std::string canon = covering_canonical_form(cand);
    auto& dest = placed.size() == 1 ? singletons : types;
    if (dest.count(canon)) return;
    CoveringType ty;
    ty.canonical = canon;
    ty.copy_count = int(placed.size());
    Graph u = underlying_graph(cand);
    ty.union_vertices = u.vertex_count();
    ty.union_edges = u.edge_count();
    ty.singleton = placed.size() == 1;
    if (!ty.singleton) ty.density = t_density(cand);
    ty.representative = std::move(cand);
    validate_covering(ty.representative);
    dest.emplace(canon, std::move(ty));
  }
};

}  // namespace

CoveringTypeList enumerate_covering_types(const Graph& t, const Graph& h,
                                          const EnumerationOptions& opts) {
  if (t.edge_count() < 1 || h.edge_count() < 1)
    throw InputError("covering enumeration needs patterns with at least one edge");
  if (t.has_isolated() || h.has_isolated())
    throw InputError("covering enumeration requires isolate-free graphs");
  Enumerator en(t, h, opts);
  en.run();
  CoveringTypeList out;
  for (auto& [k, v] : en.types) out.types.push_back(std::move(v));
  for (auto& [k, v] : en.singletons) out.singletons.push_back(std::move(v));
  return out;
}

Resolution t_resolution(const Graph& t, const Graph& h, const EnumerationOptions& opts) {
  if (t.edge_count() < 2 || !is_two_balanced(t))
    throw InputError("T must be 2-balanced");
  if (homomorphism_exists(h, t))
    throw InputError("H must not be contained in a blow-up of T");

  Covering fe = build_special_covering(t, h);
  TDensity fe_density = t_density(fe);
  if (fe_density.infinite)
    throw InputError("special covering has unbounded density");

  EnumerationOptions capped = opts;
  capped.density_cap = fe_density.value;
  CoveringTypeList list = enumerate_covering_types(t, h, capped);

  std::sort(list.types.begin(), list.types.end(),
            [](const CoveringType& a, const CoveringType& b) {
              if (a.density.value != b.density.value)
                return a.density.value < b.density.value;
              return a.canonical < b.canonical;
            });

  Resolution res;
  res.base_exponent = appearance_exponent(t);
  std::string fe_canon = covering_canonical_form(fe);
  for (std::size_t i = 0; i < list.types.size(); ++i) {
    res.densities.push_back(list.types[i].density.value);
    res.threshold_exponents.push_back(threshold_exponent(list.types[i].density.value));
    if (list.types[i].canonical == fe_canon) res.fe_index = int(i);
  }
  res.types = std::move(list.types);
  if (res.fe_index < 0)
    throw InputError("internal: special covering type missing from its own resolution");
  res.fe_type = res.types[res.fe_index];
  return res;
}

// ---------------------------------------------------------------------------
// Instance counting: sub-collections of a pool isomorphic to a type.

namespace {

struct InstanceSearch {
  const CoveringType& ft;
  std::span<const Copy> pool;
  std::vector<std::set<std::string>> prefix_forms;  // by sub-collection size
  std::vector<std::vector<int>>* collect = nullptr;
  long long count = 0;

  InstanceSearch(const CoveringType& ft_, std::span<const Copy> pool_)
      : ft(ft_), pool(pool_) {
    int k = ft.copy_count;
    if (k > 16) throw GuardError("instance search refused for types with > 16 copies");
    prefix_forms.assign(k + 1, {});
    const auto& reps = ft.representative.copies;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<Copy> sub;
      for (int i = 0; i < k; ++i)
        if ((mask >> i) & 1u) sub.push_back(reps[i]);
      prefix_forms[std::popcount(mask)].insert(
          collection_canonical_form(sub));
    }
  }

  void run() {
    std::vector<int> chosen;
    std::vector<Copy> chosen_copies;
    rec(0, chosen, chosen_copies, EdgeBits{}, 0);
  }

  void rec(int start, std::vector<int>& chosen, std::vector<Copy>& copies,
           EdgeBits used, std::uint64_t support) {
    if (int(chosen.size()) == ft.copy_count) {
      ++count;
      if (collect) collect->push_back(chosen);
      return;
    }
    for (int i = start; i < int(pool.size()); ++i) {
      const Copy& c = pool[i];
      if (c.edges.intersects(used)) continue;
      std::uint64_t sup2 = support | c.vertices;
      if (std::popcount(sup2) > ft.union_vertices) continue;
      copies.push_back(c);
      std::string form = collection_canonical_form(copies);
      bool ok = int(copies.size()) == ft.copy_count
                    ? form == ft.canonical
                    : prefix_forms[copies.size()].count(form) > 0;
      if (ok) {
        chosen.push_back(i);
        rec(i + 1, chosen, copies, used | c.edges, sup2);
        chosen.pop_back();
      }
      copies.pop_back();
    }
  }
};

}  // namespace

long long count_covering_instances(const CoveringType& ft, std::span<const Copy> pool) {
  if (pool.empty()) return 0;
  InstanceSearch s(ft, pool);
  s.run();
  return s.count;
}

std::vector<std::vector<int>> find_covering_instances(const CoveringType& ft,
                                                      std::span<const Copy> pool) {
  std::vector<std::vector<int>> out;
  if (pool.empty()) return out;
  InstanceSearch s(ft, pool);
  s.collect = &out;
  s.run();
  return out;
}

Covering fano_covering() {
  // difference-set triples {i, i+1, i+3} mod 7 decompose K_7
  Covering f{Graph::complete(3), Graph::complete(7), 7, {}};
  for (int i = 0; i < 7; ++i) {
    int a = i, b = (i + 1) % 7, c = (i + 3) % 7;
    Copy cp;
    cp.edges.set(pair_index(a, b));
    cp.edges.set(pair_index(a, c));
    cp.edges.set(pair_index(b, c));
    cp.vertices = (std::uint64_t(1) << a) | (std::uint64_t(1) << b) |
                  (std::uint64_t(1) << c);
    f.copies.push_back(cp);
  }
  return f;
}

std::vector<Copy> crossing_triangles(int n) {
  if (n < 3 || n > kMaxVertices) throw InputError("crossing triangles: bad n");
  int half = (n + 1) / 2;
  std::vector<Copy> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        bool low = a < half || b < half || c < half;
        bool high = a >= half || b >= half || c >= half;
        if (!(low && high)) continue;
        Copy cp;
        cp.edges.set(pair_index(a, b));
        cp.edges.set(pair_index(a, c));
        cp.edges.set(pair_index(b, c));
        cp.vertices = (std::uint64_t(1) << a) | (std::uint64_t(1) << b) |
                      (std::uint64_t(1) << c);
        out.push_back(cp);
      }
  return out;
}

}  // namespace turan
