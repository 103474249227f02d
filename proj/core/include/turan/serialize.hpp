#pragma once

#include <span>
#include <string>

#include "turan/covering.hpp"
#include "turan/density.hpp"
#include "turan/extremal.hpp"
#include "turan/probability.hpp"
#include "turan/random_sim.hpp"

namespace turan {

// JSON/CSV emission for the CLI and file outputs. Rationals always print as
// "num/den"; probabilities print with 12 significant digits.

std::string density_json(const DensityReport& rep, bool two_balanced);
std::string covering_json(const Covering& f);
std::string covering_type_json(const CoveringType& ty);
std::string resolution_json(const Resolution& res);
std::string covering_list_json(const CoveringTypeList& list);
std::string extremal_json(const ExtremalResult& res, bool graph_witness);
std::string pi_sequence_json(const PiSequence& seq);
std::string psi_json(const PsiReport& rep, double closed_form, bool have_closed);
std::string janson_json(const JansonReport& rep);
std::string concentration_json(const ConcentrationStats& st);
std::string core_json(const Graph& core, long long t_count);

std::string scan_csv(const ScanResult& scan);
std::string scan_json(const ScanResult& scan);

std::string format_p(double p);  // 12 significant digits

}  // namespace turan
