#include "turan/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "turan/copies.hpp"
#include "turan/errors.hpp"

namespace turan {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Greedy H-free subgraph: delete the first edge of the lexicographically
// first surviving H-copy until none remain. Used to seed the incumbent.
Graph greedy_h_free(Graph g, const Graph& h) {
  while (true) {
    auto copy = lexicographic_first_copy(h, g);
    if (!copy) return g;
    int first = copy->edges.indices().front();
    auto [u, v] = pair_from_index(first);
    g.remove_edge(u, v);
  }
}

// Exact maximization of N_T over H-free subgraphs of the host. Branches on
// the edges of a live H-copy: branch j deletes the copy's j-th free edge and
// pins the earlier ones, which partitions the solution space. A node whose
// host is already H-free is closed exactly by taking the whole host.
struct HFreeSolver {
  const Graph& t;
  const Graph& h;
  std::uint64_t budget;
  std::atomic<long long> best{-1};
  Graph best_witness;
  std::mutex best_mu;
  std::atomic<std::uint64_t> nodes{0};

  void offer(long long value, const Graph& witness) {
    std::scoped_lock lock(best_mu);
    if (value > best.load()) {
      best.store(value);
      best_witness = witness;
    }
  }

  void solve(Graph& host, EdgeBits pinned) {
    if (++nodes > budget) throw GuardError("extremal search budget exceeded");
    long long bound = count_copies(t, host);
    if (bound <= best.load()) return;
    auto copy = find_copy(h, host);
    if (!copy) {
      offer(bound, host);
      return;
    }
    auto edges = copy->edges.indices();
    for (int e : edges) {
      if (pinned.test(e)) continue;
      auto [u, v] = pair_from_index(e);
      host.remove_edge(u, v);
      solve(host, pinned);
      host.add_edge(u, v);
      pinned.set(e);
    }
  }

  // Root split for parallel search: first live H-copy's branches are
  // distributed over a small pool sharing the incumbent atomically.
  void solve_parallel(const Graph& host, int threads) {
    auto copy = find_copy(h, host);
    if (!copy) {
      offer(count_copies(t, host), host);
      return;
    }
    auto edges = copy->edges.indices();
    struct Job {
      Graph host;
      EdgeBits pinned;
    };
    std::vector<Job> jobs;
    EdgeBits pinned;
    for (int e : edges) {
      auto [u, v] = pair_from_index(e);
      Graph child = host;
      child.remove_edge(u, v);
      jobs.push_back({child, pinned});
      pinned.set(e);
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int i = 0; i < threads; ++i) {
      pool.emplace_back([&] {
        try {
          for (std::size_t j = next.fetch_add(1); j < jobs.size();
               j = next.fetch_add(1))
            solve(jobs[j].host, jobs[j].pinned);
        } catch (...) {
          std::scoped_lock lock(err_mu);
          if (!err) err = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
};

ExtremalResult run_h_free(const Graph& host, const Graph& t, const Graph& h,
                          const Guards& guards, const SolverConfig& cfg,
                          bool root_symmetric) {
  auto start = Clock::now();
  HFreeSolver solver{t, h, guards.node_budget};
  Graph seed = greedy_h_free(host, h);
  solver.best = count_copies(t, seed);
  solver.best_witness = seed;

  Graph work = host;
  if (root_symmetric) {
    // host is complete: every optimum misses some edge of the first H-copy,
    // and all of them are equivalent under relabeling, so one branch suffices
    auto copy = find_copy(h, work);
    if (copy) {
      int e = copy->edges.indices().front();
      auto [u, v] = pair_from_index(e);
      work.remove_edge(u, v);
    }
  }
  if (!cfg.deterministic && cfg.threads > 1) {
    solver.solve_parallel(work, cfg.threads);
  } else {
    EdgeBits pinned;
    solver.solve(work, pinned);
  }

  ExtremalResult res;
  res.n = host.vertex_count();
  res.value = solver.best.load();
  res.witness = solver.best_witness;
  res.nodes_explored = solver.nodes.load();
  res.millis = elapsed_ms(start);

  // independent re-verification of the witness
  if (contains_subgraph(h, res.witness))
    throw InputError("internal: H-free witness contains H");
  if (count_copies(t, res.witness) != res.value)
    throw InputError("internal: witness copy count mismatch");
  return res;
}

}  // namespace

ExtremalResult ex_exact(int n, const Graph& t, const Graph& h,
                        const Guards& guards, const SolverConfig& cfg) {
  if (n < t.vertex_count()) throw InputError("ex(n,T,H) needs n >= v_T");
  if (n > guards.max_n_ex)
    throw GuardError("ex solver refused: n exceeds guard (" +
                     std::to_string(guards.max_n_ex) + ")");
  if (t.vertex_count() == 0 || h.vertex_count() == 0)
    throw InputError("ex(n,T,H) needs nonempty T and H");
  return run_h_free(Graph::complete(n), t, h, guards, cfg, /*root_symmetric=*/true);
}

ExtremalResult max_t_copies_h_free(const Graph& g, const Graph& t, const Graph& h,
                                   const Guards& guards, const SolverConfig& cfg) {
  if (t.vertex_count() == 0 || h.vertex_count() == 0)
    throw InputError("solver needs nonempty T and H");
  if (g.edge_count() > guards.max_edges_sample_solver &&
      count_copies(h, g) > guards.max_h_copies)
    throw GuardError("sample solver refused: host too large for exact search");
  return run_h_free(g, t, h, guards, cfg, /*root_symmetric=*/false);
}

// ---------------------------------------------------------------------------
// ex-hat: maximum family-free sub-collection of a pool of T-copies.

namespace {

struct ExxSolver {
  const std::vector<Copy>& pool;
  const std::vector<std::vector<int>>& hyperedges;  // indices into pool
  std::uint64_t budget;

  int n = 0;
  std::vector<std::vector<int>> edges_of;  // vertex -> hyperedge ids
  std::vector<int> order;                  // branching order (degree desc)
  std::vector<int> pos_of;                 // vertex -> position in order

  long long best = -1;
  std::vector<int> best_set;
  std::uint64_t nodes = 0;

  std::vector<int> chosen_count;   // per hyperedge
  std::vector<int> excluded_count;
  std::vector<char> state;         // 0 undecided, 1 chosen, 2 excluded
  std::vector<int> chosen;

  explicit ExxSolver(const std::vector<Copy>& pool_,
                     const std::vector<std::vector<int>>& hyper,
                     std::uint64_t budget_)
      : pool(pool_), hyperedges(hyper), budget(budget_) {
    n = int(pool.size());
    edges_of.assign(n, {});
    for (int e = 0; e < int(hyperedges.size()); ++e)
      for (int v : hyperedges[e]) edges_of[v].push_back(e);
    order.resize(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return edges_of[a].size() > edges_of[b].size();
    });
    pos_of.assign(n, 0);
    for (int i = 0; i < n; ++i) pos_of[order[i]] = i;
    chosen_count.assign(hyperedges.size(), 0);
    excluded_count.assign(hyperedges.size(), 0);
    state.assign(n, 0);
  }

  // Admissible bound: undecided vertices minus a greedy packing of pairwise
  // vertex-disjoint hyperedges that are still fully free (each such edge
  // forces at least one distinct future exclusion).
  long long bound(int depth) const {
    long long undecided = 0;
    for (int i = depth; i < n; ++i)
      if (state[order[i]] == 0) ++undecided;
    long long base = (long long)chosen.size() + undecided;
    std::vector<char> blocked(n, 0);
    long long packing = 0;
    for (int e = 0; e < int(hyperedges.size()); ++e) {
      if (excluded_count[e] > 0) continue;
      bool free_edge = true;
      for (int v : hyperedges[e])
        if (state[v] != 0 || blocked[v]) { free_edge = false; break; }
      if (!free_edge) continue;
      ++packing;
      for (int v : hyperedges[e]) blocked[v] = 1;
    }
    return base - packing;
  }

  bool can_choose(int v) const {
    for (int e : edges_of[v])
      if (excluded_count[e] == 0 &&
          chosen_count[e] + 1 == int(hyperedges[e].size()))
        return false;
    return true;
  }

  void search(int depth) {
    if (++nodes > budget) throw GuardError("ex-hat search budget exceeded");
    while (depth < n && state[order[depth]] != 0) ++depth;
    if (depth == n) {
      if ((long long)chosen.size() > best) {
        best = chosen.size();
        best_set = chosen;
      }
      return;
    }
    if (bound(depth) <= best) return;
    int v = order[depth];
    if (can_choose(v)) {
      state[v] = 1;
      chosen.push_back(v);
      for (int e : edges_of[v]) ++chosen_count[e];
      search(depth + 1);
      for (int e : edges_of[v]) --chosen_count[e];
      chosen.pop_back();
    }
    state[v] = 2;
    for (int e : edges_of[v]) ++excluded_count[e];
    search(depth + 1);
    for (int e : edges_of[v]) --excluded_count[e];
    state[v] = 0;
  }
};

}  // namespace

ExtremalResult max_family_free_subfamily(std::span<const Copy> pool,
                                         std::span<const CoveringType> family,
                                         const Guards& guards,
                                         const SolverConfig& cfg) {
  (void)cfg;
  auto start = Clock::now();
  if (int(pool.size()) > guards.max_pool_exx)
    throw GuardError("ex-hat solver refused: pool exceeds guard (" +
                     std::to_string(guards.max_pool_exx) + ")");
  std::vector<Copy> copies(pool.begin(), pool.end());

  std::vector<std::vector<int>> hyper;
  for (const auto& ft : family) {
    auto instances = find_covering_instances(ft, copies);
    for (auto& inst : instances) {
      hyper.push_back(std::move(inst));
      if (hyper.size() > guards.instance_budget)
        throw GuardError("ex-hat refused: covering instance count exceeds guard");
    }
  }

  ExtremalResult res;
  res.n = 0;
  if (hyper.empty()) {
    res.value = (long long)copies.size();
    res.witness_copies = copies;
    res.millis = elapsed_ms(start);
    return res;
  }

  ExxSolver solver(copies, hyper, guards.node_budget);
  solver.search(0);
  res.value = solver.best;
  std::sort(solver.best_set.begin(), solver.best_set.end());
  for (int i : solver.best_set) res.witness_copies.push_back(copies[i]);
  res.nodes_explored = solver.nodes;
  res.millis = elapsed_ms(start);

  // re-verify: the witness must contain no instance of any family type
  for (const auto& ft : family)
    if (count_covering_instances(ft, res.witness_copies) != 0)
      throw InputError("internal: ex-hat witness contains a forbidden covering");
  return res;
}

ExtremalResult exx_exact(int n, const Graph& t, std::span<const CoveringType> family,
                         const Guards& guards, const SolverConfig& cfg) {
  if (n < t.vertex_count()) throw InputError("ex-hat needs n >= v_T");
  if (n > kMaxVertices) throw InputError("n exceeds vertex cap");
  auto pool = enumerate_copies(t, Graph::complete(n));
  auto res = max_family_free_subfamily(pool, family, guards, cfg);
  res.n = n;
  return res;
}

PiSequence pi_sequence_surrogate(int n, const Graph& t, const Graph& h,
                                 const Guards& guards, const SolverConfig& cfg) {
  PiSequence seq;
  seq.n = n;
  seq.resolution = t_resolution(t, h);
  int vt = t.vertex_count();
  long long n_pow = 1;
  for (int i = 0; i < vt; ++i) n_pow *= n;

  long long base_count = count_copies_complete(t, n);
  seq.entries.push_back(
      {appearance_exponent(t).reciprocal(), base_count, Rational(base_count, n_pow)});

  int k = int(seq.resolution.types.size());
  for (int i = 1; i <= k; ++i) {
    // only the last index of a run of equal densities qualifies: the prefix
    // {F_1..F_i} then holds every type up to that density
    if (i < k && seq.resolution.densities[i - 1] == seq.resolution.densities[i])
      continue;
    auto res = exx_exact(n, t,
                         std::span<const CoveringType>(seq.resolution.types.data(), i),
                         guards, cfg);
    Rational pi(res.value, n_pow);
    // equal pi values collapse onto their first threshold
    if (pi == seq.entries.back().pi_value_at_n) continue;
    seq.entries.push_back({seq.resolution.densities[i - 1], res.value, pi});
  }
  return seq;
}

}  // namespace turan
