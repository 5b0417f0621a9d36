#pragma once

#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "agora/best_response.hpp"
#include "agora/dynamics.hpp"
#include "agora/economy.hpp"
#include "agora/nash.hpp"
#include "agora/two_agent.hpp"

namespace agora {

// Economy files are JSON documents with fields
//   n                 agent count
//   spending          row-major n x n array, [i][j] = fraction of agent j
//                     spent on agent i
//   utility           row-major n x n array
//   initial_currency  optional length-n array (uniform when omitted)
// Serialization keeps reals round-trip exact, so saved files re-parse to
// identical economies.

Economy economy_from_json(const nlohmann::json& doc);
nlohmann::json economy_to_json(const Economy& economy);

Economy load_economy(const std::filesystem::path& path);
void save_economy(const Economy& economy, const std::filesystem::path& path);

/// CSV with header "episode,x_1,...,x_n", one row per retained episode.
std::string trace_to_csv(const SimulationTrace& trace);

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const CurrencyDistribution& distribution);
nlohmann::json to_json(const UtilityProfile& profile);
nlohmann::json to_json(const BestResponseResult& result);
nlohmann::json to_json(const EquilibriumCatalog& catalog);
nlohmann::json to_json(const EquilibriumReport& report);

}  // namespace agora
