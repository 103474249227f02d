#include "turan/density.hpp"

#include "turan/errors.hpp"

namespace turan {

DensityReport two_density(const Graph& h) {
  int n = h.vertex_count();
  if (h.edge_count() < 2)
    throw InputError("2-density undefined: graph has no subgraph with >= 2 edges");
  if (n > 24)
    throw GuardError("2-density subset sweep refused beyond 24 vertices");
  // For a fixed vertex set the ratio (e-1)/(v-2) is maximized by taking all
  // induced edges, so sweeping vertex subsets with their induced edge counts
  // covers every maximizing subgraph.
  bool have = false;
  Rational best;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    int v = std::popcount(mask);
    if (v < 3) continue;
    int e = 0;
    std::uint64_t rest = mask;
    while (rest) {
      int a = std::countr_zero(rest);
      rest &= rest - 1;
      e += std::popcount(h.neighbors(a) & mask &
                         ((std::uint64_t(1) << a) - 1));
    }
    if (e < 2) continue;
    Rational r(e - 1, v - 2);
    if (!have || best < r) {
      have = true;
      best = r;
      best_mask = mask;
    }
  }
  return {best, h.induced(best_mask)};
}

bool is_two_balanced(const Graph& t) {
  int v = t.vertex_count();
  int e = t.edge_count();
  if (e < 2) throw InputError("2-balancedness undefined: fewer than 2 edges");
  return two_density(t).value == Rational(e - 1, v - 2);
}

Rational fe_density_closed_form(const Graph& t, const Graph& h) {
  if (t.edge_count() < 2 || t.vertex_count() < 3)
    throw InputError("closed form requires T with >= 2 edges on >= 3 vertices");
  Rational m2 = two_density(h).value;
  return Rational(t.edge_count()) /
         (Rational(t.vertex_count() - 2) + m2.reciprocal());
}

Rational threshold_exponent(const Rational& density) {
  if (density.num() == 0) throw InputError("zero density has no threshold exponent");
  return density.reciprocal();
}

Rational appearance_exponent(const Graph& t) {
  if (t.edge_count() == 0) throw InputError("appearance exponent needs >= 1 edge");
  return Rational(t.vertex_count(), t.edge_count());
}

}  // namespace turan
