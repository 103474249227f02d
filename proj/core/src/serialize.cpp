#include "turan/serialize.hpp"

#include <cstdio>

#include <json.hpp>

namespace turan {
namespace {

using json = nlohmann::ordered_json;

json copy_pairs(const Copy& c) {
  json pairs = json::array();
  c.edges.for_each([&](int idx) {
    auto [u, v] = pair_from_index(idx);
    pairs.push_back(json::array({u, v}));
  });
  return pairs;
}

json covering_obj(const Covering& f) {
  json j;
  j["universe_size"] = f.universe_size;
  json copies = json::array();
  for (const auto& c : f.copies) copies.push_back(copy_pairs(c));
  j["copies"] = copies;
  j["target"] = f.target.to_graph6();
  j["union"] = underlying_graph(f).to_graph6();
  if (f.copies.size() >= 2) {
    TDensity d = t_density(f);
    j["density"] = d.infinite ? "inf" : d.value.to_string();
  } else {
    j["density"] = nullptr;
  }
  return j;
}

json type_obj(const CoveringType& ty) {
  json j = covering_obj(ty.representative);
  j["copy_count"] = ty.copy_count;
  j["union_vertices"] = ty.union_vertices;
  j["union_edges"] = ty.union_edges;
  j["singleton"] = ty.singleton;
  return j;
}

json parse_number(const std::string& s) { return json::parse(s); }

}  // namespace

std::string format_p(double p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

std::string density_json(const DensityReport& rep, bool two_balanced) {
  json j;
  j["m2"] = rep.value.to_string();
  j["two_balanced"] = two_balanced;
  j["witness"] = rep.witness.to_graph6();
  return j.dump();
}

std::string covering_json(const Covering& f) { return covering_obj(f).dump(); }

std::string covering_type_json(const CoveringType& ty) { return type_obj(ty).dump(); }

std::string resolution_json(const Resolution& res) {
  json j;
  j["base_exponent"] = res.base_exponent.to_string();
  json types = json::array();
  for (const auto& ty : res.types) types.push_back(type_obj(ty));
  j["types"] = types;
  json dens = json::array();
  for (const auto& d : res.densities) dens.push_back(d.to_string());
  j["densities"] = dens;
  json exps = json::array();
  for (const auto& e : res.threshold_exponents) exps.push_back(e.to_string());
  j["threshold_exponents"] = exps;
  j["fe_index"] = res.fe_index;
  return j.dump();
}

std::string covering_list_json(const CoveringTypeList& list) {
  json j;
  json types = json::array();
  for (const auto& ty : list.types) types.push_back(type_obj(ty));
  j["types"] = types;
  json singles = json::array();
  for (const auto& ty : list.singletons) singles.push_back(type_obj(ty));
  j["singletons"] = singles;
  return j.dump();
}

std::string extremal_json(const ExtremalResult& res, bool graph_witness) {
  json j;
  j["n"] = res.n;
  j["value"] = res.value;
  if (graph_witness) {
    j["witness_graph6"] = res.witness.to_graph6();
  } else {
    json copies = json::array();
    for (const auto& c : res.witness_copies) copies.push_back(copy_pairs(c));
    j["witness_copies"] = copies;
  }
  j["nodes"] = res.nodes_explored;
  j["millis"] = res.millis;
  return j.dump();
}

std::string pi_sequence_json(const PiSequence& seq) {
  json j;
  j["n"] = seq.n;
  json entries = json::array();
  for (const auto& e : seq.entries) {
    json row;
    row["mu"] = e.mu.to_string();
    row["exx"] = e.pi_numerator;
    row["pi_at_n"] = e.pi_value_at_n.to_string();
    entries.push_back(row);
  }
  j["entries"] = entries;
  json dens = json::array();
  for (const auto& d : seq.resolution.densities) dens.push_back(d.to_string());
  j["resolution_densities"] = dens;
  return j.dump();
}

std::string psi_json(const PsiReport& rep, double closed_form, bool have_closed) {
  json j;
  j["value"] = rep.value;
  j["witness"] = rep.witness.to_graph6();
  if (have_closed)
    j["closed_form"] = closed_form;
  else
    j["closed_form"] = nullptr;
  return j.dump();
}

std::string janson_json(const JansonReport& rep) {
  json j;
  j["mu"] = rep.mu;
  j["delta"] = rep.delta;
  j["t"] = rep.t;
  j["bound"] = rep.bound;
  return j.dump();
}

std::string concentration_json(const ConcentrationStats& st) {
  json j;
  j["trials"] = st.trials;
  j["mean"] = st.mean;
  j["std"] = st.stddev;
  j["expectation"] = st.expectation;
  j["ratio"] = st.ratio;
  return j.dump();
}

std::string core_json(const Graph& core, long long t_count) {
  json j;
  j["graph6"] = core.to_graph6();
  j["t_copies"] = t_count;
  return j.dump();
}

namespace {

std::string threshold_markers(const ScanResult& scan, const ScanRow& row) {
  std::string m;
  if (row.bound_only_trials > 0)
    m += "bound-only:" + std::to_string(row.bound_only_trials) + ";";
  if (scan.have_resolution) {
    m += "p0=" + scan.base_exponent.to_string();
    for (std::size_t i = 0; i < scan.threshold_exponents.size(); ++i)
      m += ";p" + std::to_string(i + 1) + "=" + scan.threshold_exponents[i].to_string();
  }
  return m;
}

std::string num12(double x) { return format_p(x); }

}  // namespace

std::string scan_csv(const ScanResult& scan) {
  std::string out =
      "exponent,p,trials,mean_ex,std_ex,normalized_pi,mean_NT,threshold_markers\n";
  for (const auto& row : scan.rows) {
    out += row.exponent.to_string();
    out += ",";
    out += format_p(row.p);
    out += ",";
    out += std::to_string(row.trials);
    out += ",";
    out += num12(row.mean_ex);
    out += ",";
    out += num12(row.std_ex);
    out += ",";
    out += num12(row.normalized_pi);
    out += ",";
    out += num12(row.mean_nt);
    out += ",";
    out += threshold_markers(scan, row);
    out += "\n";
  }
  return out;
}

std::string scan_json(const ScanResult& scan) {
  json j;
  j["n"] = scan.n;
  if (scan.have_resolution) {
    j["base_exponent"] = scan.base_exponent.to_string();
    json exps = json::array();
    for (const auto& e : scan.threshold_exponents) exps.push_back(e.to_string());
    j["threshold_exponents"] = exps;
  }
  json rows = json::array();
  for (const auto& row : scan.rows) {
    json r;
    r["exponent"] = row.exponent.to_string();
    r["p"] = parse_number(format_p(row.p));
    r["trials"] = row.trials;
    r["mean_ex"] = row.mean_ex;
    r["std_ex"] = row.std_ex;
    r["normalized_pi"] = row.normalized_pi;
    r["mean_NT"] = row.mean_nt;
    r["bound_only"] = row.bound_only_trials;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump();
}

}  // namespace turan
