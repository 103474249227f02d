#include "turan/random_sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "turan/copies.hpp"
#include "turan/errors.hpp"
#include "turan/probability.hpp"

namespace turan {
namespace {

// counter-based generator: a few rounds of splitmix64 keyed on
// (seed, trial, counter); stateless, platform-independent
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t trial, std::uint64_t counter) {
  std::uint64_t k = mix64(seed ^ mix64(trial ^ 0x5851f42d4c957f2dull));
  std::uint64_t r = mix64(k ^ mix64(counter ^ 0x14057b7ef767814full));
  return double(r >> 11) * 0x1.0p-53;  // [0, 1)
}

// deterministic ordered trial loop, optionally chunked over threads; results
// land in per-trial slots so the merge never depends on scheduling
template <typename F>
void run_trials(int trials, int threads, F&& per_trial) {
  threads = std::max(1, std::min(threads, trials));
  if (threads == 1) {
    for (int i = 0; i < trials; ++i) per_trial(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      try {
        for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1))
          per_trial(i);
      } catch (...) {
        std::scoped_lock lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

double sample_std(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / double(xs.size() - 1));
}

}  // namespace

Sample sample_gnp(int n, double p, std::uint64_t seed, int trial) {
  if (p < 0.0 || p > 1.0) throw InputError("p must lie in [0,1]");
  if (n < 0 || n > kMaxVertices) throw InputError("n out of range");
  Graph g(n);
  int idx = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++idx)
      if (uniform01(seed, std::uint64_t(trial), std::uint64_t(idx)) < p)
        g.add_edge(u, v);
  return Sample{std::move(g), n, p, seed, trial};
}

Graph extract_disjoint_core(const Graph& g, const Graph& t) {
  // pass 1: drop edges covered by more than one copy
  std::vector<int> cover(pair_count(g.vertex_count()), 0);
  for (const auto& c : enumerate_copies(t, g))
    c.edges.for_each([&](int e) { ++cover[e]; });
  Graph g1 = g;
  for (auto [u, v] : g.edges())
    if (cover[pair_index(u, v)] > 1) g1.remove_edge(u, v);
  // pass 2: drop edges no longer covered at all
  std::vector<int> cover1(pair_count(g.vertex_count()), 0);
  for (const auto& c : enumerate_copies(t, g1))
    c.edges.for_each([&](int e) { ++cover1[e]; });
  Graph g2 = g1;
  for (auto [u, v] : g1.edges())
    if (cover1[pair_index(u, v)] == 0) g2.remove_edge(u, v);
  return g2;
}

Graph lower_bound_easy(const Graph& g, const Graph& h,
                       const std::optional<Graph>& sub) {
  const Graph& target = sub ? *sub : h;
  if (sub && !contains_subgraph(*sub, h))
    throw InputError("lower_bound_easy: deletion target must be a subgraph of H");
  Graph cur = g;
  while (true) {
    auto copy = lexicographic_first_copy(target, cur);
    if (!copy) return cur;
    auto [u, v] = pair_from_index(copy->edges.indices().front());
    cur.remove_edge(u, v);
  }
}

ResolutionBound lower_bound_resolution(const Graph& g, const Graph& t, const Graph& h,
                                       std::span<const Copy> extremal_pool) {
  Graph core = extract_disjoint_core(g, t);
  // keep only edges covered by copies of the core that belong to the pool
  EdgeBits keep;
  for (const auto& c : enumerate_copies(t, core)) {
    bool in_pool = false;
    for (const auto& m : extremal_pool)
      if (m == c) { in_pool = true; break; }
    if (in_pool) keep |= c.edges;
  }
  Graph restricted(g.vertex_count());
  keep.for_each([&](int e) {
    auto [u, v] = pair_from_index(e);
    restricted.add_edge(u, v);
  });
  // delete all edges of every surviving H-copy, in one simultaneous pass
  EdgeBits doomed;
  for (const auto& c : enumerate_copies(h, restricted)) doomed |= c.edges;
  Graph out = restricted;
  doomed.for_each([&](int e) {
    auto [u, v] = pair_from_index(e);
    out.remove_edge(u, v);
  });
  return ResolutionBound{out, count_copies(t, out)};
}

ConcentrationStats concentration_check(const Graph& t, int n, double p, int trials,
                                       std::uint64_t seed, int threads) {
  if (trials < 1) throw InputError("trials must be >= 1");
  std::vector<double> counts(trials);
  run_trials(trials, threads, [&](int i) {
    Sample s = sample_gnp(n, p, seed, i);
    counts[i] = double(count_copies(t, s.graph));
  });
  ConcentrationStats st;
  st.trials = trials;
  double sum = 0.0;
  for (double c : counts) sum += c;
  st.mean = sum / trials;
  st.stddev = sample_std(counts, st.mean);
  st.expectation = expected_copy_count(t, n, p);
  st.ratio = st.expectation > 0.0 ? st.mean / st.expectation : 0.0;
  return st;
}

ScanResult phase_scan(const Graph& t, const Graph& h, int n,
                      std::span<const Rational> exponents, int trials,
                      std::uint64_t seed, const Guards& guards,
                      const SolverConfig& cfg) {
  if (trials < 1) throw InputError("trials must be >= 1");
  ScanResult out;
  out.n = n;
  try {
    Resolution res = t_resolution(t, h);
    out.have_resolution = true;
    out.base_exponent = res.base_exponent;
    out.threshold_exponents = res.threshold_exponents;
  } catch (const InputError&) {
    out.have_resolution = false;
  }

  int vt = t.vertex_count();
  int et = t.edge_count();
  for (const Rational& a : exponents) {
    double p = std::pow(double(n), -a.to_double());
    ScanRow row;
    row.exponent = a;
    row.p = p;
    row.trials = trials;

    struct TrialOut {
      double ex = 0.0;
      double nt = 0.0;
      bool bound_only = false;
    };
    std::vector<TrialOut> results(trials);
    // identical samples (always at p = 1) solve once
    std::map<std::string, std::pair<double, bool>> memo;
    std::mutex memo_mu;
    run_trials(trials, cfg.threads, [&](int i) {
      Sample s = sample_gnp(n, p, seed, i);
      results[i].nt = double(count_copies(t, s.graph));
      std::string key = s.graph.to_graph6();
      {
        std::scoped_lock lock(memo_mu);
        auto it = memo.find(key);
        if (it != memo.end()) {
          results[i].ex = it->second.first;
          results[i].bound_only = it->second.second;
          return;
        }
      }
      double value;
      bool bound_only = false;
      try {
        value = double(max_t_copies_h_free(s.graph, t, h, guards, cfg).value);
      } catch (const GuardError&) {
        value = double(count_copies(t, lower_bound_easy(s.graph, h)));
        bound_only = true;
      }
      results[i].ex = value;
      results[i].bound_only = bound_only;
      std::scoped_lock lock(memo_mu);
      memo.emplace(std::move(key), std::make_pair(value, bound_only));
    });

    std::vector<double> exs(trials);
    double sum_ex = 0.0, sum_nt = 0.0;
    for (int i = 0; i < trials; ++i) {
      exs[i] = results[i].ex;
      sum_ex += results[i].ex;
      sum_nt += results[i].nt;
      if (results[i].bound_only) ++row.bound_only_trials;
    }
    row.mean_ex = sum_ex / trials;
    row.std_ex = sample_std(exs, row.mean_ex);
    row.mean_nt = sum_nt / trials;
    double denom = std::pow(double(n), vt) * std::pow(p, et);
    row.normalized_pi = denom > 0.0 ? row.mean_ex / denom : 0.0;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace turan
