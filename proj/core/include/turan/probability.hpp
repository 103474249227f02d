#pragma once

#include <span>

#include "turan/graph.hpp"

namespace turan {

/// E[N_pattern(G(n,p))] = N_pattern(K_n) * p^{e_pattern}.
double expected_copy_count(const Graph& pattern, int n, double p);

/// Psi_T(n,p) = min over nonempty subgraphs T' of T (at least one edge) of
/// n^{v(T')} p^{e(T')}, with the attaining subgraph. For 2-balanced T this
/// equals n^{v_T} p^{e_T} below p = n^{-1/m_2(T)} and n^2 p above.
struct PsiReport {
  double value = 0.0;
  Graph witness;
};
PsiReport psi_t(const Graph& t, int n, double p);

/// The piecewise closed form for 2-balanced T (second route for the same
/// quantity; the enumeration above must agree with it exactly).
double psi_t_closed_form(const Graph& t, int n, double p);

/// Janson lower-tail bound for the number of pool members appearing in
/// G(n,p): P(X <= mu - t) <= exp(-t^2 / (2(mu + delta))), where
/// mu = |pool| p^{e_T} and delta sums p^{e(T_i u T_j)} over ordered pairs of
/// distinct edge-intersecting copies.
struct JansonReport {
  double mu = 0.0;
  double delta = 0.0;
  double t = 0.0;
  double bound = 1.0;
};
JansonReport janson_lower_tail(std::span<const Copy> pool, double p, double shortfall);

}  // namespace turan
