#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "turan/covering.hpp"
#include "turan/graph.hpp"
#include "turan/rational.hpp"

namespace turan {

/// Size guards for the exact solvers. Exceeding a guard is an explicit
/// refusal (GuardError), never a silent fallback to a heuristic.
struct Guards {
  int max_n_ex = 10;                 // ex(n,T,H) host size
  int max_pool_exx = 128;            // T-copies in the ex-hat pool
  int max_edges_sample_solver = 40;  // sample solver: edge bound ...
  long long max_h_copies = 1000;     // ... or H-copy bound (either suffices)
  std::uint64_t node_budget = 2'000'000'000;
  std::uint64_t instance_budget = 2'000'000;  // materialized hyperedges
};

struct SolverConfig {
  int threads = 1;
  bool deterministic = true;  // sequential search; parallel root split otherwise
};

struct ExtremalResult {
  int n = 0;
  long long value = 0;
  Graph witness;                    // ex / sample solver
  std::vector<Copy> witness_copies; // ex-hat
  double millis = 0.0;
  std::uint64_t nodes_explored = 0;
};

/// ex(n,T,H): exact maximum of N_T over H-free subgraphs of K_n, by branch
/// and bound on edge deletions driven by live H-copies, with a symmetry
/// shortcut at the root (all K_n edges are equivalent).
ExtremalResult ex_exact(int n, const Graph& t, const Graph& h,
                        const Guards& guards = {}, const SolverConfig& cfg = {});

/// Same search on an arbitrary host: max of N_T over H-free subgraphs of g.
ExtremalResult max_t_copies_h_free(const Graph& g, const Graph& t, const Graph& h,
                                   const Guards& guards = {},
                                   const SolverConfig& cfg = {});

/// ex-hat(n,T,F): exact maximum size of a family of T-copies in K_n that
/// contains no covering instance from `family`. Maximum independent set in
/// the hypergraph whose vertices are T(K_n) and whose edges are the
/// instances of the family types.
ExtremalResult exx_exact(int n, const Graph& t, std::span<const CoveringType> family,
                         const Guards& guards = {}, const SolverConfig& cfg = {});

/// Generic hypergraph variant over an explicit pool (the exx kernel).
ExtremalResult max_family_free_subfamily(std::span<const Copy> pool,
                                         std::span<const CoveringType> family,
                                         const Guards& guards = {},
                                         const SolverConfig& cfg = {});

/// One row of the finite-n threshold/extremal profile.
struct PiEntry {
  Rational mu;               // density: e_T/v_T for the base row, m_T(F_i) after
  long long pi_numerator;    // ex-hat(n, T, {F_1..F_i}) (N_T(K_n) for the base row)
  Rational pi_value_at_n;    // pi_numerator / n^{v_T}
};
struct PiSequence {
  int n = 0;
  std::vector<PiEntry> entries;
  Resolution resolution;
};

/// Finite-n surrogate of the (mu_i, pi_i) sequence: evaluates ex-hat over
/// resolution prefixes at the qualifying indices (last index of each run of
/// equal densities, plus the final one), deduplicating equal pi values.
PiSequence pi_sequence_surrogate(int n, const Graph& t, const Graph& h,
                                 const Guards& guards = {},
                                 const SolverConfig& cfg = {});

}  // namespace turan
