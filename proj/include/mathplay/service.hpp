#pragma once

// HTTP facade: game sessions for interactive play plus rendering, puzzle and
// estimator endpoints. Api::handle is transport-free; HttpServer binds it to
// a socket.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mathplay/games.hpp"

namespace mathplay::service {

// Bounds enforced on render and estimator parameters.
struct Limits {
  std::uint32_t max_points = 2000;
  std::size_t max_order = 12;
  std::size_t max_samples = 100'000;
  std::uint64_t max_drops = 10'000'000;
  std::uint64_t max_heap = 1'000'000'000'000ull;
  std::size_t max_heaps = 64;
  std::uint64_t max_target = 1'000'000;
};

enum class Side { First, Second };
enum class Player { Human, Engine };

struct LoggedMove {
  Player player = Player::Human;
  games::NimMove move;
};

struct Session {
  std::string id;
  bool nim = true;
  games::Heaps heaps;                     // nim state
  std::uint64_t target = 0;               // subtraction game
  std::vector<std::uint64_t> move_sizes;  // subtraction game
  std::uint64_t remaining = 0;            // subtraction game
  Side human_side = Side::First;
  Player to_move = Player::Human;
  std::vector<LoggedMove> move_log;
  std::int64_t created_at_ms = 0;
  std::int64_t last_touched_ms = 0;

  bool over() const;
};

using Clock = std::function<std::int64_t()>;  // milliseconds since the epoch

std::int64_t system_clock_ms();

// In-memory sessions under one mutex. With a snapshot path, every state
// transition appends one JSON object per line; recover() replays a file.
class SessionStore {
 public:
  SessionStore(std::chrono::milliseconds ttl, Clock clock, std::optional<std::string> snapshot_path);

  Session create(Session initial);
  // Empty when the id is unknown or its session idled past the TTL.
  std::optional<Session> get(const std::string& id);
  // Runs `update` on the live session under the lock, then stores and logs it.
  template <typename F>
  std::optional<Session> update(const std::string& id, F&& update_fn);

  std::size_t size();
  // Loads the latest record per id; sessions already past the TTL are dropped.
  std::size_t recover(const std::string& path);

 private:
  bool expired(const Session& s, std::int64_t now) const;
  void purge(std::int64_t now);
  void append_snapshot(const char* event, const Session& s);
  std::string new_id();

  std::chrono::milliseconds ttl_;
  Clock clock_;
  std::optional<std::string> snapshot_path_;
  std::mutex mutex_;
  std::map<std::string, Session> sessions_;
  std::uint64_t id_counter_ = 0;
};

struct ApiRequest {
  std::string method;
  std::string path;
  std::multimap<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

struct ApiConfig {
  std::chrono::milliseconds session_ttl = std::chrono::hours(1);
  Clock clock = system_clock_ms;
  std::optional<std::string> snapshot_path;
  Limits limits;
};

class Api {
 public:
  // Replays config.snapshot_path when the file already exists.
  explicit Api(ApiConfig config = {});

  ApiResponse handle(const ApiRequest& request);
  // Splits "path?query" (percent-encoded) before dispatching.
  ApiResponse handle(const std::string& method, const std::string& target, const std::string& body = {});

  SessionStore& sessions() noexcept { return store_; }
  const Limits& limits() const noexcept { return config_.limits; }

 private:
  ApiConfig config_;
  SessionStore store_;
};

struct ServerConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::optional<std::string> ui_dir;
};

class HttpServer {
 public:
  HttpServer(Api& api, ServerConfig config);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds the socket; returns the bound port or -1 on failure.
  int bind();
  // Serves until stop(); requires a successful bind().
  bool serve();
  // Blocks until serve() is accepting connections.
  void wait_until_ready();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// ---- template definitions ----

template <typename F>
std::optional<Session> SessionStore::update(const std::string& id, F&& update_fn) {
  std::lock_guard lock(mutex_);
  const auto now = clock_();
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) return std::nullopt;
  if (expired(it->second, now)) {
    append_snapshot("expire", it->second);
    sessions_.erase(it);
    return std::nullopt;
  }
  Session next = it->second;
  update_fn(next);
  next.last_touched_ms = now;
  it->second = next;
  append_snapshot("move", next);
  return next;
}

}  // namespace mathplay::service
