#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turan/density.hpp"
#include "turan/graph.hpp"
#include "turan/rational.hpp"

namespace turan {

/// A T-covering of H: pairwise edge-disjoint placed copies of `pattern`
/// whose union contains a copy of `target`, minimal in the sense that some
/// target placement inside the union is met edge-wise by every copy (so
/// dropping any copy destroys that placement), with every universe vertex
/// used by some copy.
struct Covering {
  Graph pattern;   // T
  Graph target;    // H
  int universe_size = 0;
  std::vector<Copy> copies;
};

/// Union of a collection of copies, compacted to its vertex support
/// (isolated-vertex free by construction).
Graph underlying_graph(std::span<const Copy> copies);
Graph underlying_graph(const Covering& f);

/// Throws InputError describing the first violated covering invariant.
void validate_covering(const Covering& f);

/// T-density of a covering: max over sub-collections F' with |F'| >= 2 of
/// (e_U(F') - e_T)/(v_U(F') - v_T). A sub-collection spanning exactly v_T
/// vertices makes the maximum infinite.
struct TDensity {
  bool infinite = false;
  Rational value;
  std::vector<int> witness;  // copy indices of the attaining sub-collection
};
TDensity t_density(const Covering& f);

/// The special covering F^e_{T,H}: one T-copy per H-edge, meeting H exactly
/// in that edge, all remaining vertices fresh and disjoint across copies.
/// Copies attach along the first edge of `t` (for T with inequivalent edges
/// this picks one of several isomorphism types; the density is the same for
/// all of them).
Covering build_special_covering(const Graph& t, const Graph& h);

/// Canonical form of a collection of copies under covering isomorphism:
/// equal iff some bijection of the vertex supports maps copies onto copies.
/// Copy order is immaterial.
std::string collection_canonical_form(std::span<const Copy> copies);
std::string covering_canonical_form(const Covering& f);

/// Isomorphism class of a covering with its basic statistics.
struct CoveringType {
  std::string canonical;
  Covering representative;
  int copy_count = 0;
  int union_vertices = 0;
  int union_edges = 0;
  TDensity density;          // meaningful only when copy_count >= 2
  bool singleton = false;    // H fits inside a single T-copy
};

struct EnumerationOptions {
  /// Exact prune: keep only coverings in which every sub-collection of size
  /// >= 2 has density <= cap. The T-resolution uses cap = m_T(F^e); without
  /// a cap the complete type list is produced (feasible only for small
  /// pairs; the node budget guards the rest).
  std::optional<Rational> density_cap;
  std::uint64_t node_budget = 50'000'000;
};

struct CoveringTypeList {
  std::vector<CoveringType> types;       // copy_count >= 2, sorted by canonical
  std::vector<CoveringType> singletons;  // flagged separately, excluded from densities
};

/// Complete, duplicate-free list of T-covering types of H (restricted by the
/// density cap when one is set). Every copy of a minimal covering carries an
/// edge of a fixed H-placement, so the search over edge partitions of H with
/// bounded fresh vertices is exhaustive.
CoveringTypeList enumerate_covering_types(const Graph& t, const Graph& h,
                                          const EnumerationOptions& opts = {});

/// The T-resolution of H: all covering types with density <= m_T(F^e),
/// ordered by density (ties by canonical form), with the associated
/// threshold exponents p_i = n^{-1/m_T(F_i)} and p_0 = n^{-v_T/e_T}.
struct Resolution {
  std::vector<CoveringType> types;
  std::vector<Rational> densities;
  std::vector<Rational> threshold_exponents;
  Rational base_exponent;
  int fe_index = -1;
  CoveringType fe_type;
};
Resolution t_resolution(const Graph& t, const Graph& h,
                        const EnumerationOptions& opts = {});

/// Number of sub-collections of `pool` isomorphic, as coverings, to `ft`.
long long count_covering_instances(const CoveringType& ft, std::span<const Copy> pool);

/// The instances themselves, as sorted index lists into `pool`.
std::vector<std::vector<int>> find_covering_instances(const CoveringType& ft,
                                                      std::span<const Copy> pool);

/// The Fano plane realized as a covering of K_7 by 7 edge-disjoint
/// triangles (a Steiner triple system on 7 points).
Covering fano_covering();

/// All triangles of K_n with at least one vertex on each side of the
/// balanced split {0..ceil(n/2)-1} vs the rest. Fano-free because the Fano
/// plane is not 2-colorable.
std::vector<Copy> crossing_triangles(int n);

}  // namespace turan
