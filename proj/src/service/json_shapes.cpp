#include "json_shapes.hpp"

#include <set>

#include "mathplay/error.hpp"

namespace mathplay::service {

const char* outcome_name(games::Outcome o) { return o == games::Outcome::First ? "First" : "Second"; }
const char* side_name(Side s) { return s == Side::First ? "First" : "Second"; }
const char* player_name(Player p) { return p == Player::Human ? "human" : "engine"; }

Json move_json(const games::NimMove& m, bool nim) {
  Json j = Json::object();
  if (nim) j["heap"] = m.heap_index;
  j["take"] = m.take;
  return j;
}

Json analysis_json(const games::GameAnalysis& a, bool nim) {
  Json moves = Json::array();
  for (const auto& m : a.optimal_moves) moves.push_back(move_json(m, nim));
  return Json{{"outcome", outcome_name(a.outcome)}, {"grundy", a.grundy}, {"optimalMoves", moves}};
}

Json session_json(const Session& s) {
  Json j;
  j["id"] = s.id;
  j["kind"] = s.nim ? "nim" : "make";
  Json state;
  games::GameAnalysis analysis;
  if (s.nim) {
    state["heaps"] = s.heaps;
    analysis = games::analyze_nim(s.heaps);
  } else {
    state["target"] = s.target;
    state["moves"] = s.move_sizes;
    state["total"] = s.target - s.remaining;
    state["remaining"] = s.remaining;
    const games::SubtractionGame game(s.target, {s.move_sizes.begin(), s.move_sizes.end()});
    analysis = games::analyze_subtraction(game, s.remaining);
  }
  j["state"] = state;
  j["humanSide"] = side_name(s.human_side);
  const bool over = s.over();
  j["turn"] = over ? "over" : player_name(s.to_move);
  const auto a = analysis_json(analysis, s.nim);
  j["outcome"] = a["outcome"];
  j["grundy"] = a["grundy"];
  j["optimalMoves"] = a["optimalMoves"];
  if (!s.move_log.empty() && s.move_log.back().player == Player::Engine) {
    j["engineMove"] = move_json(s.move_log.back().move, s.nim);
  } else {
    j["engineMove"] = nullptr;
  }
  j["over"] = over;
  // Normal play: whoever faces a terminal position has lost.
  if (over) {
    j["winner"] = s.to_move == Player::Human ? "engine" : "human";
  } else {
    j["winner"] = nullptr;
  }
  Json log = Json::array();
  for (const auto& m : s.move_log) {
    Json entry = move_json(m.move, s.nim);
    entry["player"] = player_name(m.player);
    log.push_back(entry);
  }
  j["moveLog"] = log;
  j["createdAt"] = s.created_at_ms;
  j["lastTouched"] = s.last_touched_ms;
  return j;
}

Session session_from_json(const Json& j) {
  Session s;
  s.id = j.at("id").get<std::string>();
  s.nim = j.at("kind").get<std::string>() == "nim";
  const auto& state = j.at("state");
  if (s.nim) {
    s.heaps = state.at("heaps").get<games::Heaps>();
  } else {
    s.target = state.at("target").get<std::uint64_t>();
    s.move_sizes = state.at("moves").get<std::vector<std::uint64_t>>();
    s.remaining = state.at("remaining").get<std::uint64_t>();
  }
  s.human_side = j.at("humanSide").get<std::string>() == "First" ? Side::First : Side::Second;
  const auto turn = j.at("turn").get<std::string>();
  if (turn == "over") {
    s.to_move = j.at("winner").get<std::string>() == "engine" ? Player::Human : Player::Engine;
  } else {
    s.to_move = turn == "human" ? Player::Human : Player::Engine;
  }
  for (const auto& entry : j.at("moveLog")) {
    LoggedMove m;
    m.player = entry.at("player").get<std::string>() == "human" ? Player::Human : Player::Engine;
    m.move.heap_index = entry.value("heap", std::size_t{0});
    m.move.take = entry.at("take").get<std::uint64_t>();
    s.move_log.push_back(m);
  }
  s.created_at_ms = j.at("createdAt").get<std::int64_t>();
  s.last_touched_ms = j.at("lastTouched").get<std::int64_t>();
  return s;
}

Json points_json(const Drawing& d) {
  Json lines = Json::array();
  for (const auto& line : d.polylines) {
    Json pts = Json::array();
    for (const auto& p : line) pts.push_back(Json::array({p.x, p.y}));
    lines.push_back(pts);
  }
  return lines;
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

}  // namespace mathplay::service
