// turanlab: exact densities, covering resolutions, small-n extremal numbers
// and G(n,p) phase scans for the generalized Turan problem ex(G(n,p), T, H).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "turan/canonical.hpp"
#include "turan/copies.hpp"
#include "turan/covering.hpp"
#include "turan/density.hpp"
#include "turan/errors.hpp"
#include "turan/extremal.hpp"
#include "turan/probability.hpp"
#include "turan/random_sim.hpp"
#include "turan/serialize.hpp"

namespace {

using namespace turan;

struct Options {
  std::uint64_t seed = 12345;
  int trials = 1;
  int threads = 1;
  bool deterministic = true;
  bool timings = false;  // wall times are not reproducible; opt in
  std::string format = "json";
  std::string out_path;
  Guards guards;
};

Graph resolve_graph(const std::string& spec) {
  if (auto g = named_graph(spec)) return *g;
  std::error_code ec;
  if (std::filesystem::exists(spec, ec)) {
    std::ifstream in(spec);
    std::string line;
    while (std::getline(in, line)) {
      // first non-blank line holds the graph
      std::string trimmed = line;
      std::erase_if(trimmed, [](unsigned char c) { return std::isspace(c); });
      if (!trimmed.empty()) return resolve_graph(line);
    }
    throw InputError("graph file '" + spec + "' is empty");
  }
  if (spec.find(';') != std::string::npos) return Graph::from_edge_list(spec);
  return Graph::from_graph6(spec);
}

std::vector<Rational> parse_exponents(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw InputError("empty exponent in list");
    out.push_back(Rational::parse(tok));
  }
  if (out.empty()) throw InputError("exponent list is empty");
  return out;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) throw InputError("cannot open output file '" + opt.out_path + "'");
  out << text << "\n";
}

SolverConfig solver_config(const Options& opt) {
  return SolverConfig{opt.threads, opt.deterministic};
}

// family specs for exx: "fe" (the special covering), "fano", "none",
// or "resolution:<i>" for the first i types of the T-resolution of H
std::vector<CoveringType> resolve_family(const std::string& spec, const Graph& t,
                                         const std::optional<Graph>& h) {
  std::vector<CoveringType> family;
  auto type_of = [](const Covering& f) {
    CoveringType ty;
    ty.canonical = covering_canonical_form(f);
    ty.copy_count = int(f.copies.size());
    Graph u = underlying_graph(f);
    ty.union_vertices = u.vertex_count();
    ty.union_edges = u.edge_count();
    if (ty.copy_count >= 2) ty.density = t_density(f);
    ty.representative = f;
    return ty;
  };
  if (spec == "none") return family;
  if (spec == "fano") {
    if (canonical_form(t) != canonical_form(Graph::complete(3)))
      throw InputError("family 'fano' requires T = K3");
    family.push_back(type_of(fano_covering()));
    return family;
  }
  if (!h) throw InputError("family '" + spec + "' needs --H");
  if (spec == "fe") {
    family.push_back(type_of(build_special_covering(t, *h)));
    return family;
  }
  if (spec.rfind("resolution:", 0) == 0) {
    int count = 0;
    try {
      count = std::stoi(spec.substr(11));
    } catch (...) {
      throw InputError("bad family spec '" + spec + "'");
    }
    Resolution res = t_resolution(t, *h);
    if (count < 0 || count > int(res.types.size()))
      throw InputError("resolution prefix out of range (resolution has " +
                       std::to_string(res.types.size()) + " types)");
    family.assign(res.types.begin(), res.types.begin() + count);
    return family;
  }
  throw InputError("unknown family spec '" + spec +
                   "' (expected fe, fano, none or resolution:<i>)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"turanlab: generalized Turan problems in random graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* env = std::getenv("TURANLAB_THREADS")) {
    try { opt.threads = std::max(1, std::stoi(env)); } catch (...) {}
  }
  app.add_option("--seed", opt.seed, "RNG seed");
  app.add_option("--trials", opt.trials, "Monte-Carlo trials");
  app.add_option("--threads", opt.threads, "worker threads");
  app.add_flag("--deterministic,!--no-deterministic", opt.deterministic,
               "sequential search (reproducible witnesses)");
  app.add_flag("--timings", opt.timings,
               "report wall-clock millis (breaks byte-reproducibility)");
  app.add_option("--format", opt.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opt.out_path, "write report to file instead of stdout");
  app.add_option("--max-n-ex", opt.guards.max_n_ex, "ex solver size guard");
  app.add_option("--max-pool-exx", opt.guards.max_pool_exx, "ex-hat pool guard");
  app.add_option("--max-edges-solver", opt.guards.max_edges_sample_solver,
                 "sample solver edge guard");
  app.add_option("--max-h-copies", opt.guards.max_h_copies,
                 "sample solver H-copy guard");

  std::string g_spec, t_spec, h_spec, host_spec, family_spec = "none";
  std::string exponent_list;
  int n = 0;
  double p = 0.5, shortfall = 0.0;
  bool full_enum = false;
  std::string cap_spec;

  auto* density_cmd = app.add_subcommand("density", "2-density and 2-balancedness");
  density_cmd->add_option("--graph", g_spec, "graph (graph6, builtin, edge list or file)")
      ->required();

  auto* resolution_cmd = app.add_subcommand("resolution", "T-resolution of H");
  resolution_cmd->add_option("--T", t_spec)->required();
  resolution_cmd->add_option("--H", h_spec)->required();

  auto* coverings_cmd = app.add_subcommand("coverings", "T-covering types of H");
  coverings_cmd->add_option("--T", t_spec)->required();
  coverings_cmd->add_option("--H", h_spec)->required();
  coverings_cmd->add_flag("--full", full_enum, "no density cap (may refuse on budget)");
  coverings_cmd->add_option("--cap", cap_spec, "density cap num/den");

  auto* ex_cmd = app.add_subcommand("ex", "exact ex(n,T,H)");
  ex_cmd->add_option("--n", n)->required();
  ex_cmd->add_option("--T", t_spec)->required();
  ex_cmd->add_option("--H", h_spec)->required();

  auto* exx_cmd = app.add_subcommand("exx", "exact ex-hat(n,T,family)");
  exx_cmd->add_option("--n", n)->required();
  exx_cmd->add_option("--T", t_spec)->required();
  exx_cmd->add_option("--H", h_spec);
  exx_cmd->add_option("--family", family_spec, "fe|fano|none|resolution:<i>");

  auto* piseq_cmd = app.add_subcommand("pi-seq", "finite-n (mu, pi) sequence");
  piseq_cmd->add_option("--n", n)->required();
  piseq_cmd->add_option("--T", t_spec)->required();
  piseq_cmd->add_option("--H", h_spec)->required();

  auto* psi_cmd = app.add_subcommand("psi", "Psi_T(n,p) minimum");
  psi_cmd->add_option("--T", t_spec)->required();
  psi_cmd->add_option("--n", n)->required();
  psi_cmd->add_option("--p", p)->required();

  auto* janson_cmd = app.add_subcommand("janson", "Janson lower-tail bound");
  janson_cmd->add_option("--T", t_spec)->required();
  janson_cmd->add_option("--host", host_spec, "host graph carrying the copy pool")
      ->required();
  janson_cmd->add_option("--p", p)->required();
  janson_cmd->add_option("--shortfall", shortfall)->required();

  auto* scan_cmd = app.add_subcommand("scan", "Monte-Carlo phase scan");
  scan_cmd->add_option("--T", t_spec)->required();
  scan_cmd->add_option("--H", h_spec)->required();
  scan_cmd->add_option("--n", n)->required();
  scan_cmd->add_option("--exponents", exponent_list, "comma-separated rationals")
      ->required();

  auto* conc_cmd = app.add_subcommand("concentration", "N_T concentration stats");
  conc_cmd->add_option("--T", t_spec)->required();
  conc_cmd->add_option("--n", n)->required();
  conc_cmd->add_option("--p", p)->required();

  auto* core_cmd = app.add_subcommand("core", "edge-disjoint T-core of a graph");
  core_cmd->add_option("--graph", g_spec)->required();
  core_cmd->add_option("--T", t_spec)->required();

  try {
    app.parse(argc, argv);

    if (*density_cmd) {
      Graph g = resolve_graph(g_spec);
      DensityReport rep = two_density(g);
      emit(opt, density_json(rep, is_two_balanced(g)));
    } else if (*resolution_cmd) {
      Resolution res = t_resolution(resolve_graph(t_spec), resolve_graph(h_spec));
      emit(opt, resolution_json(res));
    } else if (*coverings_cmd) {
      EnumerationOptions eopts;
      if (!cap_spec.empty())
        eopts.density_cap = Rational::parse(cap_spec);
      else if (!full_enum) {
        Graph t = resolve_graph(t_spec), h = resolve_graph(h_spec);
        TDensity fe = t_density(build_special_covering(t, h));
        if (!fe.infinite) eopts.density_cap = fe.value;
      }
      auto list = enumerate_covering_types(resolve_graph(t_spec),
                                           resolve_graph(h_spec), eopts);
      emit(opt, covering_list_json(list));
    } else if (*ex_cmd) {
      auto res = ex_exact(n, resolve_graph(t_spec), resolve_graph(h_spec),
                          opt.guards, solver_config(opt));
      if (!opt.timings) res.millis = 0.0;
      emit(opt, extremal_json(res, /*graph_witness=*/true));
    } else if (*exx_cmd) {
      Graph t = resolve_graph(t_spec);
      std::optional<Graph> h;
      if (!h_spec.empty()) h = resolve_graph(h_spec);
      auto family = resolve_family(family_spec, t, h);
      auto res = exx_exact(n, t, family, opt.guards, solver_config(opt));
      if (!opt.timings) res.millis = 0.0;
      emit(opt, extremal_json(res, /*graph_witness=*/false));
    } else if (*piseq_cmd) {
      auto seq = pi_sequence_surrogate(n, resolve_graph(t_spec),
                                       resolve_graph(h_spec), opt.guards,
                                       solver_config(opt));
      emit(opt, pi_sequence_json(seq));
    } else if (*psi_cmd) {
      Graph t = resolve_graph(t_spec);
      PsiReport rep = psi_t(t, n, p);
      bool have_closed = false;
      double closed = 0.0;
      try {
        closed = psi_t_closed_form(t, n, p);
        have_closed = true;
      } catch (const InputError&) {
      }
      emit(opt, psi_json(rep, closed, have_closed));
    } else if (*janson_cmd) {
      Graph t = resolve_graph(t_spec);
      Graph host = resolve_graph(host_spec);
      auto pool = enumerate_copies(t, host);
      emit(opt, janson_json(janson_lower_tail(pool, p, shortfall)));
    } else if (*scan_cmd) {
      auto exps = parse_exponents(exponent_list);
      auto scan = phase_scan(resolve_graph(t_spec), resolve_graph(h_spec), n, exps,
                             opt.trials, opt.seed, opt.guards, solver_config(opt));
      emit(opt, opt.format == "json" ? scan_json(scan) : scan_csv(scan));
    } else if (*conc_cmd) {
      auto st = concentration_check(resolve_graph(t_spec), n, p, opt.trials,
                                    opt.seed, opt.threads);
      emit(opt, concentration_json(st));
    } else if (*core_cmd) {
      Graph t = resolve_graph(t_spec);
      Graph core = extract_disjoint_core(resolve_graph(g_spec), t);
      emit(opt, core_json(core, count_copies(t, core)));
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      app.exit(e);
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const GuardError& e) {
    std::cerr << "guard refusal: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
