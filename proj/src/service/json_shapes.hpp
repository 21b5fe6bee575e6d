#pragma once

#include <string>

#include "json.hpp"
#include "mathplay/games.hpp"
#include "mathplay/geometry.hpp"
#include "mathplay/service.hpp"

namespace mathplay::service {

using Json = nlohmann::ordered_json;

const char* outcome_name(games::Outcome o);
const char* side_name(Side s);
const char* player_name(Player p);

Json move_json(const games::NimMove& m, bool nim);
Json analysis_json(const games::GameAnalysis& a, bool nim);

// Full session record: used both in API responses and snapshot lines.
Json session_json(const Session& s);
Session session_from_json(const Json& j);

Json points_json(const Drawing& d);

Json error_json(const std::string& code, const std::string& message);

}  // namespace mathplay::service
