#include <fstream>
#include <random>
#include <sstream>

#include "json_shapes.hpp"
#include "mathplay/error.hpp"
#include "mathplay/service.hpp"

namespace mathplay::service {

bool Session::over() const {
  if (nim) return games::is_terminal(heaps);
  return move_sizes.empty() || remaining < move_sizes.front();
}

std::int64_t system_clock_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

SessionStore::SessionStore(std::chrono::milliseconds ttl, Clock clock, std::optional<std::string> snapshot_path)
    : ttl_(ttl), clock_(std::move(clock)), snapshot_path_(std::move(snapshot_path)) {}

bool SessionStore::expired(const Session& s, std::int64_t now) const {
  return now - s.last_touched_ms > ttl_.count();
}

void SessionStore::purge(std::int64_t now) {
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    if (expired(it->second, now)) {
      append_snapshot("expire", it->second);
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
}

std::string SessionStore::new_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << rng();
  out.width(8);
  out << (++id_counter_ & 0xffffffffu);
  return out.str();
}

void SessionStore::append_snapshot(const char* event, const Session& s) {
  if (!snapshot_path_) return;
  std::ofstream out(*snapshot_path_, std::ios::app);
  if (!out) throw Error(ErrorCode::Io, "cannot append to snapshot file " + *snapshot_path_);
  Json record{{"event", event}, {"session", session_json(s)}};
  out << record.dump() << '\n';
}

Session SessionStore::create(Session initial) {
  std::lock_guard lock(mutex_);
  const auto now = clock_();
  purge(now);
  do {
    initial.id = new_id();
  } while (sessions_.contains(initial.id));
  initial.created_at_ms = now;
  initial.last_touched_ms = now;
  sessions_.emplace(initial.id, initial);
  append_snapshot("create", initial);
  return initial;
}

std::optional<Session> SessionStore::get(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto now = clock_();
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) return std::nullopt;
  if (expired(it->second, now)) {
    append_snapshot("expire", it->second);
    sessions_.erase(it);
    return std::nullopt;
  }
  it->second.last_touched_ms = now;
  return it->second;
}

std::size_t SessionStore::size() {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

std::size_t SessionStore::recover(const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::map<std::string, std::optional<Session>> latest;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto record = Json::parse(line, nullptr, false);
    // A torn final line from a crash is skipped.
    if (record.is_discarded() || !record.contains("session")) continue;
    try {
      auto s = session_from_json(record.at("session"));
      const auto id = s.id;
      if (record.value("event", "") == "expire") {
        latest[id] = std::nullopt;
      } else {
        latest[id] = std::move(s);
      }
    } catch (const std::exception&) {
      continue;
    }
  }
  std::lock_guard lock(mutex_);
  const auto now = clock_();
  std::size_t restored = 0;
  for (auto& [id, s] : latest) {
    if (!s || expired(*s, now)) continue;
    sessions_[id] = std::move(*s);
    ++restored;
  }
  return restored;
}

}  // namespace mathplay::service
