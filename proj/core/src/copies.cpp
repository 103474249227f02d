#include "turan/copies.hpp"

#include <algorithm>
#include <unordered_set>

#include "turan/errors.hpp"

namespace turan {
namespace {

// Static assignment order: start at a max-degree vertex, then repeatedly
// take the vertex with the most already-ordered neighbors (ties by degree,
// then index). Keeps candidate sets small for connected patterns and walks
// each component in one run.
std::vector<int> embedding_order(const Graph& p) {
  int n = p.vertex_count();
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order)
        if (p.has_edge(u, v)) ++links;
      if (links > best_links ||
          (links == best_links && p.degree(v) > best_deg)) {
        best = v;
        best_links = links;
        best_deg = p.degree(v);
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

struct Embedder {
  const Graph& p;
  const Graph& h;
  bool induced;
  const std::function<bool(const std::array<int, kMaxVertices>&)>& visit;
  std::vector<int> order;
  std::array<int, kMaxVertices> image{};
  std::uint64_t used = 0;
  bool stopped = false;

  bool feasible_quick() const {
    if (p.vertex_count() > h.vertex_count()) return false;
    if (p.edge_count() > h.edge_count()) return false;
    return true;
  }

  void rec(std::size_t level) {
    if (stopped) return;
    if (level == order.size()) {
      if (!visit(image)) stopped = true;
      return;
    }
    int q = order[level];
    std::uint64_t cand = h.vertex_mask();
    for (std::size_t i = 0; i < level; ++i) {
      int placed = order[i];
      if (p.has_edge(placed, q))
        cand &= h.neighbors(image[placed]);
      else if (induced)
        cand &= ~h.neighbors(image[placed]);
    }
    cand &= ~used;
    int dq = p.degree(q);
    while (cand) {
      int c = std::countr_zero(cand);
      cand &= cand - 1;
      if (h.degree(c) < dq) continue;
      if (induced && h.degree(c) != dq && p.vertex_count() == h.vertex_count())
        continue;
      image[q] = c;
      used |= std::uint64_t(1) << c;
      rec(level + 1);
      used &= ~(std::uint64_t(1) << c);
      if (stopped) return;
    }
  }
};

struct CopyHash {
  std::size_t operator()(const Copy& c) const {
    std::uint64_t x = c.vertices * 0x9e3779b97f4a7c15ull;
    for (auto w : c.edges.w) x = (x ^ w) * 0x100000001b3ull;
    return std::size_t(x);
  }
};

long long count_cliques(const Graph& host, int r) {
  // ordered descent counts each r-clique once
  long long total = 0;
  auto above = [](int v) {
    return v + 1 >= 64 ? std::uint64_t(0) : (~std::uint64_t(0) << (v + 1));
  };
  std::function<void(int, std::uint64_t)> go = [&](int depth, std::uint64_t cand) {
    if (depth == r) { ++total; return; }
    std::uint64_t c = cand;
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      go(depth + 1, cand & host.neighbors(v) & above(v));
    }
  };
  go(0, host.vertex_mask());
  return total;
}

}  // namespace

void for_each_embedding(const Graph& pattern, const Graph& host,
                        const std::function<bool(const std::array<int, kMaxVertices>&)>& visit,
                        bool induced) {
  Embedder e{pattern, host, induced, visit, embedding_order(pattern)};
  if (!e.feasible_quick()) return;
  e.rec(0);
}

std::vector<Copy> enumerate_copies(const Graph& pattern, const Graph& host) {
  if (pattern.vertex_count() == 0) throw InputError("empty pattern");
  std::unordered_set<Copy, CopyHash> seen;
  auto pedges = pattern.edges();
  for_each_embedding(pattern, host, [&](const auto& img) {
    Copy c;
    for (int v = 0; v < pattern.vertex_count(); ++v)
      c.vertices |= std::uint64_t(1) << img[v];
    for (auto [a, b] : pedges) c.edges.set(pair_index(img[a], img[b]));
    seen.insert(c);
    return true;
  });
  std::vector<Copy> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Copy& a, const Copy& b) {
    if (!(a.edges == b.edges)) return edge_bits_less(a.edges, b.edges);
    return a.vertices < b.vertices;
  });
  return out;
}

long long count_copies(const Graph& pattern, const Graph& host) {
  int pv = pattern.vertex_count();
  int pe = pattern.edge_count();
  if (pv == 0) throw InputError("empty pattern");
  if (pe == 1 && pv == 2) return host.edge_count();
  if (pv == 3 && pe == 3) {
    long long sum = 0;
    for (auto [u, v] : host.edges())
      sum += std::popcount(host.neighbors(u) & host.neighbors(v));
    return sum / 3;
  }
  if (pe == pair_count(pv)) return count_cliques(host, pv);
  long long embeddings = 0;
  for_each_embedding(pattern, host, [&](const auto&) {
    ++embeddings;
    return true;
  });
  return embeddings / automorphism_count(pattern);
}

long long count_copies_complete(const Graph& pattern, int n) {
  if (n < 0) throw InputError("negative n");
  int v = pattern.vertex_count();
  if (v == 0) throw InputError("empty pattern");
  if (n < v) return 0;
  long long falling = 1;
  for (int i = 0; i < v; ++i) falling *= (n - i);
  return falling / automorphism_count(pattern);
}

bool contains_subgraph(const Graph& pattern, const Graph& host) {
  bool found = false;
  for_each_embedding(pattern, host, [&](const auto&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<Copy> find_copy(const Graph& pattern, const Graph& host) {
  std::optional<Copy> out;
  auto pedges = pattern.edges();
  for_each_embedding(pattern, host, [&](const auto& img) {
    Copy c;
    for (int v = 0; v < pattern.vertex_count(); ++v)
      c.vertices |= std::uint64_t(1) << img[v];
    for (auto [a, b] : pedges) c.edges.set(pair_index(img[a], img[b]));
    out = c;
    return false;
  });
  return out;
}

std::optional<Copy> lexicographic_first_copy(const Graph& pattern, const Graph& host) {
  auto all = enumerate_copies(pattern, host);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool homomorphism_exists(const Graph& from, const Graph& to) {
  if (to.vertex_count() == 0) throw InputError("empty homomorphism target");
  int n = from.vertex_count();
  std::vector<int> img(n, -1);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < to.vertex_count(); ++c) {
      bool ok = true;
      // has_edge(x, x) is false, so collapsing an edge is rejected here too
      for (int u = 0; u < v; ++u) {
        if (from.has_edge(u, v) && !to.has_edge(img[u], c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      img[v] = c;
      if (rec(v + 1)) return true;
      img[v] = -1;
    }
    return false;
  };
  return rec(0);
}

long long automorphism_count(const Graph& g) {
  if (g.vertex_count() == 0) return 1;
  long long count = 0;
  for_each_embedding(g, g, [&](const auto&) {
    ++count;
    return true;
  }, /*induced=*/true);
  return count;
}

int clique_number(const Graph& g) {
  int n = g.vertex_count();
  int best = n > 0 ? 1 : 0;
  std::function<void(std::uint64_t, int)> go = [&](std::uint64_t cand, int size) {
    if (size + std::popcount(cand) <= best) return;
    std::uint64_t c = cand;
    while (c) {
      int v = std::countr_zero(c);
      c &= c - 1;
      best = std::max(best, size + 1);
      go(cand & g.neighbors(v) &
             (v + 1 >= 64 ? std::uint64_t(0) : ~std::uint64_t(0) << (v + 1)),
         size + 1);
    }
  };
  if (n > 0) go(g.vertex_mask(), 0);
  return best;
}

namespace {

bool k_colorable(const Graph& g, int k) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  // order vertices by degree descending: fail early on the hard part
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
    if (i == n) return true;
    int v = order[i];
    int forbidden = 0;
    std::uint64_t row = g.neighbors(v);
    while (row) {
      int u = std::countr_zero(row);
      row &= row - 1;
      if (color[u] >= 0) forbidden |= 1 << color[u];
    }
    int limit = std::min(k, used + 1);  // first use of a new color: lowest id only
    for (int c = 0; c < limit; ++c) {
      if ((forbidden >> c) & 1) continue;
      color[v] = c;
      if (rec(i + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  int lb = clique_number(g);
  // greedy upper bound
  int ub = 1;
  {
    std::vector<int> color(n, -1);
    for (int v = 0; v < n; ++v) {
      int forbidden = 0;
      std::uint64_t row = g.neighbors(v);
      while (row) {
        int u = std::countr_zero(row);
        row &= row - 1;
        if (color[u] >= 0) forbidden |= 1 << color[u];
      }
      int c = 0;
      while ((forbidden >> c) & 1) ++c;
      color[v] = c;
      ub = std::max(ub, c + 1);
    }
  }
  for (int k = lb; k < ub; ++k)
    if (k_colorable(g, k)) return k;
  return ub;
}

}  // namespace turan
