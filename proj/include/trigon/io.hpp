#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "trigon/certify.hpp"
#include "trigon/chains.hpp"
#include "trigon/geometry.hpp"
#include "trigon/oracles.hpp"
#include "trigon/repro.hpp"
#include "trigon/search.hpp"

namespace trigon {

using json = nlohmann::ordered_json;

json to_json(const Triangle& t);
json to_json(const CoreQuantities& q, const Triangle& t);
json to_json(const ChainReport& r);
json to_json(const Certificate& c);
json to_json(const SearchResult& r);
json to_json(const Comparability& c);
json to_json(const ReproRow& r);

/// Oracle values for one triangle (the CLI `oracle` subcommand).
json oracle_report(const Triangle& t);

/// Serialises with every floating-point number printed to 17 significant
/// digits, followed by a newline.
std::string dump_json(const json& j);

}  // namespace trigon
