#include "turan/probability.hpp"

#include <algorithm>
#include <cmath>

#include "turan/copies.hpp"
#include "turan/density.hpp"
#include "turan/errors.hpp"

namespace turan {

double expected_copy_count(const Graph& pattern, int n, double p) {
  if (p < 0.0 || p > 1.0) throw InputError("p must lie in [0,1]");
  if (n < 0) throw InputError("negative n");
  return double(count_copies_complete(pattern, n)) *
         std::pow(p, pattern.edge_count());
}

PsiReport psi_t(const Graph& t, int n, double p) {
  if (t.edge_count() == 0) throw InputError("psi_T needs a pattern with edges");
  if (p <= 0.0 || p > 1.0) throw InputError("p must lie in (0,1]");
  auto tedges = t.edges();
  int et = int(tedges.size());
  PsiReport best;
  bool have = false;
  for (std::uint32_t mask = 1; mask < (1u << et); ++mask) {
    std::uint64_t support = 0;
    for (int i = 0; i < et; ++i)
      if ((mask >> i) & 1u) {
        support |= std::uint64_t(1) << tedges[i].first;
        support |= std::uint64_t(1) << tedges[i].second;
      }
    int v = std::popcount(support);
    int e = std::popcount(mask);
    double val = std::pow(double(n), v) * std::pow(p, e);
    if (!have || val < best.value) {
      have = true;
      best.value = val;
      Graph w(t.vertex_count());
      for (int i = 0; i < et; ++i)
        if ((mask >> i) & 1u) w.add_edge(tedges[i].first, tedges[i].second);
      best.witness = w.without_isolated();
    }
  }
  return best;
}

double psi_t_closed_form(const Graph& t, int n, double p) {
  if (!is_two_balanced(t)) throw InputError("closed form requires 2-balanced T");
  if (p <= 0.0 || p > 1.0) throw InputError("p must lie in (0,1]");
  double threshold = std::pow(double(n), -1.0 / two_density(t).value.to_double());
  if (p <= threshold)
    return std::pow(double(n), t.vertex_count()) * std::pow(p, t.edge_count());
  return double(n) * double(n) * p;
}

JansonReport janson_lower_tail(std::span<const Copy> pool, double p, double shortfall) {
  if (p <= 0.0 || p > 1.0) throw InputError("p must lie in (0,1]");
  JansonReport rep;
  rep.t = shortfall;
  if (pool.empty()) {
    if (shortfall != 0.0) throw InputError("shortfall exceeds mu");
    rep.bound = 1.0;
    return rep;
  }
  int et = pool.front().edges.count();
  for (const auto& c : pool)
    if (c.edges.count() != et)
      throw InputError("janson pool copies have mixed edge counts");
  rep.mu = double(pool.size()) * std::pow(p, et);
  if (shortfall < 0.0 || shortfall > rep.mu)
    throw InputError("shortfall must lie in [0, mu]");
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (i == j) continue;
      if (!pool[i].edges.intersects(pool[j].edges)) continue;
      EdgeBits uni = pool[i].edges | pool[j].edges;
      rep.delta += std::pow(p, uni.count());
    }
  rep.bound = std::exp(-shortfall * shortfall / (2.0 * (rep.mu + rep.delta)));
  rep.bound = std::clamp(rep.bound, 0.0, 1.0);
  return rep;
}

}  // namespace turan
