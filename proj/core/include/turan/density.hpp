#pragma once

#include "turan/graph.hpp"
#include "turan/rational.hpp"

namespace turan {

/// A density value together with the subgraph attaining it.
struct DensityReport {
  Rational value;
  Graph witness;
};

/// 2-density m_2(h): max over subgraphs h' with e >= 2 of (e-1)/(v-2),
/// exact, with an attaining witness. Rejects h with fewer than two edges.
DensityReport two_density(const Graph& h);

/// True iff the whole graph attains its 2-density.
bool is_two_balanced(const Graph& t);

/// m_T(F^e_{T,H}) in closed form: e_T / (v_T - 2 + 1/m_2(H)).
/// Requires t with >= 2 edges on >= 3 vertices.
Rational fe_density_closed_form(const Graph& t, const Graph& h);

/// Threshold exponent for a density d: p = n^{-1/d}, i.e. the exponent 1/d.
Rational threshold_exponent(const Rational& density);

/// Appearance exponent of t: p_0 = n^{-v_T/e_T}, i.e. the exponent v_T/e_T.
Rational appearance_exponent(const Graph& t);

}  // namespace turan
