#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

/// Compile-time vertex universe cap. Adjacency rows are single machine
/// words, which is what the search kernels rely on. Everything the toolkit
/// handles at desk scale (including special-covering unions, which need
/// v_H + e_H*(v_T-2) vertices) fits under this bound.
inline constexpr int kMaxVertices = 64;

/// Index of the unordered pair {u,v}, u < v, in column-major upper-triangle
/// order: idx = v*(v-1)/2 + u. This is exactly the bit order of the graph6
/// format, so packing/unpacking is a straight copy.
constexpr int pair_index(int u, int v) {
  return u < v ? v * (v - 1) / 2 + u : u * (u - 1) / 2 + v;
}
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

std::pair<int, int> pair_from_index(int idx);

/// Bitset over pair indices of the full vertex universe; used for edge sets
/// of copies, "used edge" masks in enumerations, and solver state.
struct EdgeBits {
  static constexpr int kWords = (pair_count(kMaxVertices) + 63) / 64;
  std::array<std::uint64_t, kWords> w{};

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void clear() { w.fill(0); }

  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool empty() const {
    for (auto x : w) if (x) return false;
    return true;
  }
  bool intersects(const EdgeBits& o) const {
    for (int i = 0; i < kWords; ++i) if (w[i] & o.w[i]) return true;
    return false;
  }
  bool is_subset_of(const EdgeBits& o) const {
    for (int i = 0; i < kWords; ++i) if (w[i] & ~o.w[i]) return false;
    return true;
  }
  EdgeBits& operator|=(const EdgeBits& o) {
    for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
    return *this;
  }
  EdgeBits& operator&=(const EdgeBits& o) {
    for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
    return *this;
  }
  friend EdgeBits operator|(EdgeBits a, const EdgeBits& b) { return a |= b; }
  friend EdgeBits operator&(EdgeBits a, const EdgeBits& b) { return a &= b; }
  friend bool operator==(const EdgeBits& a, const EdgeBits& b) { return a.w == b.w; }

  std::vector<int> indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (int wi = 0; wi < kWords; ++wi) {
      std::uint64_t x = w[wi];
      while (x) {
        int b = std::countr_zero(x);
        f(wi * 64 + b);
        x &= x - 1;
      }
    }
  }
};

/// Orders edge sets by their sorted edge-index sequences (the set whose
/// lowest differing pair index is present compares smaller). This is the
/// "lexicographically first copy" order used by the greedy constructions.
bool edge_bits_less(const EdgeBits& a, const EdgeBits& b);

/// Labeled simple graph on vertices {0..n-1}. No loops, no multi-edges.
/// Values are immutable in spirit: operations build new graphs; the few
/// mutators exist for construction and solver undo paths.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw InputError("vertex count out of range: " + std::to_string(n));
  }

  int vertex_count() const { return n_; }
  int edge_count() const {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += std::popcount(adj_[v]);
    return s / 2;
  }

  bool has_edge(int u, int v) const {
    return u != v && ((adj_[u] >> v) & 1u);
  }
  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= std::uint64_t(1) << v;
    adj_[v] |= std::uint64_t(1) << u;
  }
  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~(std::uint64_t(1) << v);
    adj_[v] &= ~(std::uint64_t(1) << u);
  }

  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
  }

  std::vector<std::pair<int, int>> edges() const;
  EdgeBits edge_bits() const;
  static Graph from_edge_bits(int n, const EdgeBits& bits);

  /// Drops isolated vertices and relabels the rest contiguously,
  /// preserving relative order.
  Graph without_isolated() const;
  bool has_isolated() const;

  /// Induced subgraph on the vertices of `mask`, relabeled contiguously.
  Graph induced(std::uint64_t mask) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

  // -- constructions -------------------------------------------------------
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);  // n vertices, n-1 edges
  static Graph complete_bipartite(int a, int b);
  static Graph petersen();

  // -- text formats ---------------------------------------------------------
  static Graph from_graph6(std::string_view s);
  std::string to_graph6() const;
  static Graph from_edge_list(std::string_view s);  // "n; u-v,u-v,..."
  std::string to_edge_list() const;

 private:
  void check_pair(int u, int v) const {
    if (u == v) throw InputError("loop edge rejected");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw InputError("edge endpoint out of range");
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Builtin graphs accepted anywhere a graph argument is expected:
/// K2..K8, C3..C8, P2..P6, K33, Petersen.
std::optional<Graph> named_graph(std::string_view name);

/// A placed copy of some pattern inside a host vertex universe, identified
/// by its edge set; `vertices` is the support (includes images of isolated
/// pattern vertices, so the pair determines the copy even then).
struct Copy {
  EdgeBits edges;
  std::uint64_t vertices = 0;

  int vertex_count() const { return std::popcount(vertices); }
  int edge_count() const { return edges.count(); }
  friend bool operator==(const Copy& a, const Copy& b) {
    return a.vertices == b.vertices && a.edges == b.edges;
  }
};

}  // namespace turan
