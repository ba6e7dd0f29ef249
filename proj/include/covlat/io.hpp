#pragma once

#include <string>

#include <json.hpp>

#include "covlat/completion.hpp"
#include "covlat/dyck.hpp"
#include "covlat/poset.hpp"
#include "covlat/strip.hpp"

namespace covlat {

/// {"n": int, "covers": [[i,j],...], "labels": [...]?}; covers listed
/// lower to upper, but any acyclic relation is accepted and closed.
Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);

/// {"m": int, "n": int, "u": [...]}
MDyckPath path_from_json(const nlohmann::json& j);
nlohmann::json path_to_json(const MDyckPath& p);

/// array of step-sequence arrays
nlohmann::json fan_to_json(const std::vector<MDyckPath>& fan);

nlohmann::json completion_report_to_json(const TamariCompletionReport& rep);
nlohmann::json conjecture_report_to_json(const ConjectureReport& rep);

Poset poset_from_file(const std::string& path);

}  // namespace covlat
