#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "turan/extremal.hpp"
#include "turan/graph.hpp"
#include "turan/rational.hpp"

namespace turan {

/// A G(n,p) draw. (seed, trial_index, n, p) determine the graph bit for bit
/// on every platform; trials are independent keyed substreams, so parallel
/// and serial scans see identical samples.
struct Sample {
  Graph graph;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  int trial_index = 0;
};

Sample sample_gnp(int n, double p, std::uint64_t seed, int trial);

/// Two-pass core: first remove every edge lying in more than one T-copy,
/// then remove every edge lying in none. Every edge of the result belongs
/// to exactly one copy of T.
Graph extract_disjoint_core(const Graph& g, const Graph& t);

/// Greedy H-free subgraph: repeatedly delete the first edge of the
/// lexicographically first copy of `sub` (default: h itself; any subgraph of
/// h makes the result h-free as well), recomputing after each deletion.
Graph lower_bound_easy(const Graph& g, const Graph& h,
                       const std::optional<Graph>& sub = std::nullopt);

/// Resolution-driven lower-bound construction: restrict the disjoint core to
/// copies from the extremal pool, then delete all edges of every surviving
/// H-copy. The result is H-free.
struct ResolutionBound {
  Graph graph;
  long long t_count = 0;
};
ResolutionBound lower_bound_resolution(const Graph& g, const Graph& t, const Graph& h,
                                       std::span<const Copy> extremal_pool);

struct ConcentrationStats {
  int trials = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double expectation = 0.0;
  double ratio = 0.0;  // mean / expectation (0 when the expectation vanishes)
};
ConcentrationStats concentration_check(const Graph& t, int n, double p, int trials,
                                       std::uint64_t seed, int threads = 1);

/// One row of a phase scan at p = n^{-exponent}.
struct ScanRow {
  Rational exponent;
  double p = 0.0;
  int trials = 0;
  double mean_ex = 0.0;
  double std_ex = 0.0;
  double normalized_pi = 0.0;  // mean_ex / (n^{v_T} p^{e_T})
  double mean_nt = 0.0;
  int bound_only_trials = 0;   // trials where the guard forced the greedy bound
};

struct ScanResult {
  int n = 0;
  std::vector<ScanRow> rows;
  bool have_resolution = false;
  Rational base_exponent;
  std::vector<Rational> threshold_exponents;
};

ScanResult phase_scan(const Graph& t, const Graph& h, int n,
                      std::span<const Rational> exponents, int trials,
                      std::uint64_t seed, const Guards& guards = {},
                      const SolverConfig& cfg = {});

}  // namespace turan
