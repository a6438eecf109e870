#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zir/verify.hpp"

namespace zir {

/// {set: [...], certificates: [{owner, fort}], maximal}
nlohmann::json witness_json(const ZirWitness& w);

/// Parameters appear in all_params() order. With `witnesses`, each value is
/// an object {value, witness[, certificates, maximal]}; otherwise a bare number.
nlohmann::json profile_json(const ParamProfile& p, bool witnesses);

nlohmann::json report_json(const CheckReport& r);

/// One line per check tally, failure, finding, leaderboard entry and realized
/// (zir, Z, Zbar, ZIR) tuple, then the summary and any per-graph profiles.
std::vector<std::string> survey_lines(const SurveyReport& report);

/// spec,n,param,expected,computed,match,source
std::string table_csv(const FamilyTable& table);

/// zir,Z,... columns for a list of profiles.
std::string profiles_csv(const std::vector<ParamProfile>& profiles, std::span<const Param> params);

}  // namespace zir
