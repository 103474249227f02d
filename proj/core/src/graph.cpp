#include "turan/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace turan {

std::pair<int, int> pair_from_index(int idx) {
  // invert idx = v*(v-1)/2 + u with u < v
  int v = int((1.0 + std::sqrt(1.0 + 8.0 * idx)) / 2.0);
  while (v * (v - 1) / 2 > idx) --v;
  while ((v + 1) * v / 2 <= idx) ++v;
  return {idx - v * (v - 1) / 2, v};
}

std::vector<int> EdgeBits::indices() const {
  std::vector<int> out;
  for_each([&](int i) { out.push_back(i); });
  return out;
}

bool edge_bits_less(const EdgeBits& a, const EdgeBits& b) {
  for (int wi = 0; wi < EdgeBits::kWords; ++wi) {
    std::uint64_t d = a.w[wi] ^ b.w[wi];
    if (d) {
      // the set containing the lowest differing index comes first
      std::uint64_t low = d & ~(d - 1);
      return a.w[wi] & low;
    }
  }
  return false;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < n_; ++v) {
    std::uint64_t row = adj_[v] & ((std::uint64_t(1) << v) - 1);
    while (row) {
      int u = std::countr_zero(row);
      out.emplace_back(u, v);
      row &= row - 1;
    }
  }
  return out;
}

EdgeBits Graph::edge_bits() const {
  EdgeBits bits;
  for (auto [u, v] : edges()) bits.set(pair_index(u, v));
  return bits;
}

Graph Graph::from_edge_bits(int n, const EdgeBits& bits) {
  Graph g(n);
  bits.for_each([&](int idx) {
    auto [u, v] = pair_from_index(idx);
    g.add_edge(u, v);
  });
  return g;
}

bool Graph::has_isolated() const {
  for (int v = 0; v < n_; ++v)
    if (adj_[v] == 0) return true;
  return false;
}

Graph Graph::without_isolated() const {
  std::uint64_t keep = 0;
  for (int v = 0; v < n_; ++v)
    if (adj_[v]) keep |= std::uint64_t(1) << v;
  return induced(keep);
}

Graph Graph::induced(std::uint64_t mask) const {
  std::array<int, kMaxVertices> remap{};
  int m = 0;
  for (int v = 0; v < n_; ++v)
    if ((mask >> v) & 1u) remap[v] = m++;
  Graph out(m);
  for (int v = 0; v < n_; ++v) {
    if (!((mask >> v) & 1u)) continue;
    std::uint64_t row = adj_[v] & mask;
    while (row) {
      int u = std::countr_zero(row);
      row &= row - 1;
      if (u < v) out.add_edge(remap[u], remap[v]);
    }
  }
  return out;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InputError("cycle needs >= 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  if (n < 1) throw InputError("path needs >= 1 vertex");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);          // outer C5
    g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    g.add_edge(v, 5 + v);                // spokes
  }
  return g;
}

// ---------------------------------------------------------------------------
// graph6

Graph Graph::from_graph6(std::string_view s) {
  auto bad = [&](const char* why) {
    throw InputError(std::string("bad graph6 '") + std::string(s) + "': " + why);
  };
  if (s.empty()) bad("empty");
  std::size_t pos = 0;
  long n;
  if (s[0] == 126) {
    if (s.size() >= 2 && s[1] == 126) bad("graph too large");
    if (s.size() < 4) bad("truncated size");
    n = 0;
    for (int i = 1; i <= 3; ++i) {
      int c = static_cast<unsigned char>(s[i]);
      if (c < 63 || c > 126) bad("byte out of range");
      n = (n << 6) | (c - 63);
    }
    pos = 4;
  } else {
    int c = static_cast<unsigned char>(s[0]);
    if (c < 63 || c > 126) bad("byte out of range");
    n = c - 63;
    pos = 1;
  }
  if (n > kMaxVertices) bad("vertex count above universe cap");
  Graph g{int(n)};
  int nbits = pair_count(int(n));
  int nbytes = (nbits + 5) / 6;
  if (int(s.size() - pos) != nbytes) bad("wrong length");
  int bit = 0;
  for (int i = 0; i < nbytes; ++i) {
    int c = static_cast<unsigned char>(s[pos + i]);
    if (c < 63 || c > 126) bad("byte out of range");
    int grp = c - 63;
    for (int k = 5; k >= 0 && bit < nbits; --k, ++bit) {
      if ((grp >> k) & 1) {
        auto [u, v] = pair_from_index(bit);
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

std::string Graph::to_graph6() const {
  std::string out;
  if (n_ <= 62) {
    out.push_back(char(n_ + 63));
  } else {
    out.push_back(char(126));
    out.push_back(char(((n_ >> 12) & 63) + 63));
    out.push_back(char(((n_ >> 6) & 63) + 63));
    out.push_back(char((n_ & 63) + 63));
  }
  int nbits = pair_count(n_);
  EdgeBits bits = edge_bits();
  for (int i = 0; i < nbits; i += 6) {
    int grp = 0;
    for (int k = 0; k < 6; ++k)
      if (i + k < nbits && bits.test(i + k)) grp |= 1 << (5 - k);
    out.push_back(char(grp + 63));
  }
  return out;
}

// ---------------------------------------------------------------------------
// edge-list text form "n; u-v,u-v,..."

Graph Graph::from_edge_list(std::string_view s) {
  auto bad = [&](const char* why) {
    throw InputError(std::string("bad edge list '") + std::string(s) + "': " + why);
  };
  std::size_t semi = s.find(';');
  if (semi == std::string_view::npos) bad("missing ';'");
  int n = 0;
  {
    std::istringstream in{std::string(s.substr(0, semi))};
    if (!(in >> n)) bad("missing vertex count");
  }
  if (n < 0 || n > kMaxVertices) bad("vertex count out of range");
  Graph g(n);
  std::string rest(s.substr(semi + 1));
  std::erase_if(rest, [](unsigned char c) { return std::isspace(c); });
  if (rest.empty()) return g;
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t comma = rest.find(',', start);
    std::string tok = rest.substr(start, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - start);
    std::size_t dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
      bad("edge token must be u-v");
    int u, v;
    try {
      u = std::stoi(tok.substr(0, dash));
      v = std::stoi(tok.substr(dash + 1));
    } catch (...) {
      bad("edge token must be u-v");
      return g;  // unreachable
    }
    if (u == v) bad("loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n) bad("endpoint out of range");
    if (g.has_edge(u, v)) bad("duplicate edge");
    g.add_edge(u, v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return g;
}

std::string Graph::to_edge_list() const {
  std::string out = std::to_string(n_) + ";";
  bool first = true;
  for (auto [u, v] : edges()) {
    out += first ? " " : ",";
    out += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return out;
}

std::optional<Graph> named_graph(std::string_view name) {
  std::string s(name);
  for (auto& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
  if (s == "petersen") return Graph::petersen();
  if (s == "k33") return Graph::complete_bipartite(3, 3);
  if (s.size() == 2 && s[1] >= '0' && s[1] <= '9') {
    int k = s[1] - '0';
    if (s[0] == 'k' && k >= 2 && k <= 8) return Graph::complete(k);
    if (s[0] == 'c' && k >= 3 && k <= 8) return Graph::cycle(k);
    if (s[0] == 'p' && k >= 2 && k <= 6) return Graph::path(k);
  }
  return std::nullopt;
}

}  // namespace turan
