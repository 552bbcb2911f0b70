#pragma once

#include <string>

#include <json.hpp>

#include "unirep/intertwine.hpp"
#include "unirep/representation.hpp"
#include "unirep/sweep.hpp"
#include "unirep/tensorsocle.hpp"
#include "unirep/verify.hpp"

namespace unirep {

nlohmann::json to_json(const SocleReport& report);
nlohmann::json to_json(const HomReport& report, bool include_matrices);
nlohmann::json to_json(const VerifyReport& report);
nlohmann::json to_json(const SweepReport& report);
nlohmann::json to_json(const AxiomReport& report);

std::string to_text(const SocleReport& report);
std::string to_text(const HomReport& report, bool include_matrices);
std::string to_text(const VerifyReport& report);
std::string to_text(const SweepReport& report);

} // namespace unirep
