#include "turan/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <vector>

#include "turan/errors.hpp"

namespace turan {
namespace {

constexpr std::uint64_t kNodeBudget = 20'000'000;

struct Canon {
  const Graph& g;
  int n;
  std::vector<int> init_color;  // colors as given, recorded into encodings
  std::string best;
  bool have_best = false;
  std::uint64_t nodes = 0;

  Canon(const Graph& graph, std::span<const int> colors)
      : g(graph), n(graph.vertex_count()), init_color(colors.begin(), colors.end()) {}

  // Stable 1-WL refinement. Color ids are renumbered 0..c-1 in the order of
  // sorted (old color, neighbor color counts) signatures, which makes the
  // numbering itself canonical given the input coloring.
  void refine(std::vector<int>& color) const {
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
    while (true) {
      std::vector<std::vector<int>> sig(n);
      for (int v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.assign(1 + classes, 0);
        s[0] = color[v];
        std::uint64_t row = g.neighbors(v);
        while (row) {
          int u = std::countr_zero(row);
          row &= row - 1;
          ++s[1 + color[u]];
        }
      }
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return sig[a] < sig[b] || (sig[a] == sig[b] && color[a] < color[b]);
      });
      std::vector<int> next(n);
      int c = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
        next[order[i]] = c;
      }
      ++c;
      if (c == classes) { color = next; return; }
      classes = c;
      color = next;
    }
  }

  void encode_leaf(const std::vector<int>& color) {
    // discrete coloring: vertex v sits at position color[v]
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[color[v]] = v;
    std::string enc;
    enc.reserve(2 + n + (pair_count(n) + 7) / 8);
    enc.push_back(char(n & 0xff));
    enc.push_back(char((n >> 8) & 0xff));
    for (int p = 0; p < n; ++p) enc.push_back(char(init_color[at[p]] & 0xff));
    int nbits = pair_count(n);
    int byte = 0, fill = 0;
    for (int b = 0; b < nbits; ++b) {
      auto [u, v] = pair_from_index(b);
      byte = (byte << 1) | (g.has_edge(at[u], at[v]) ? 1 : 0);
      if (++fill == 8) { enc.push_back(char(byte)); byte = 0; fill = 0; }
    }
    if (fill) enc.push_back(char(byte << (8 - fill)));
    if (!have_best || enc < best) { best = std::move(enc); have_best = true; }
  }

  void search(std::vector<int> color) {
    if (++nodes > kNodeBudget)
      throw GuardError("canonical labeling search budget exceeded");
    refine(color);
    // locate the smallest non-singleton cell (lowest color id)
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v) ++size[color[v]];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (size[c] >= 2) { target = c; break; }
    if (target < 0) { encode_leaf(color); return; }
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> split(n);
      for (int u = 0; u < n; ++u)
        split[u] = 2 * color[u] + (u == v ? 0 : 1);
      search(std::move(split));
    }
  }

  std::string run() {
    if (n == 0) return std::string("\0\0", 2);
    search(init_color);
    return best;
  }
};

bool uniform_adjacency(const Graph& g) {
  int n = g.vertex_count();
  return g.edge_count() == 0 || g.edge_count() == pair_count(n);
}

}  // namespace

std::string canonical_form(const Graph& g) {
  std::vector<int> colors(g.vertex_count(), 0);
  return canonical_form_colored(g, colors);
}

std::string canonical_form_colored(const Graph& g, std::span<const int> colors) {
  if (int(colors.size()) != g.vertex_count())
    throw InputError("color vector size mismatch");
  Canon c(g, colors);
  // complete and empty graphs are fully symmetric within color classes; any
  // leaf is canonical, so skip the factorial-sized search tree
  if (uniform_adjacency(g)) {
    bool all_same = true;
    for (std::size_t i = 1; i < colors.size(); ++i)
      if (colors[i] != colors[0]) { all_same = false; break; }
    if (all_same) {
      std::vector<int> discrete(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) discrete[v] = v;
      c.encode_leaf(discrete);
      return c.best;
    }
  }
  return c.run();
}

}  // namespace turan
