#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cagames/automaton.hpp"

namespace cagames::service {

inline constexpr const char* kVersion = "0.1.0";

struct Options {
  std::int64_t cell_budget = kDefaultCellBudget;
};

// Each handler is a pure function of its request body. Errors escape as
// cagames::Error; dispatch() maps them to HTTP statuses.
nlohmann::json ca_window(const nlohmann::json& request, const Options& options = {});
nlohmann::json game_moves(const nlohmann::json& request);
nlohmann::json game_apply(const nlohmann::json& request);
nlohmann::json game_outcome(const nlohmann::json& request);
nlohmann::json game_predicate(const nlohmann::json& request);
nlohmann::json triangle_outcome(const nlohmann::json& request);
nlohmann::json health();

struct Response {
  int status = 200;
  nlohmann::json body;
};

// 200 on success, 400 {code, message} for malformed input, 422 for domain
// violations and refused resource guards, 404/405 for unknown routes.
Response dispatch(std::string_view method, std::string_view path, std::string_view body,
                  const Options& options = {});

// HTTP front end over dispatch(). Requests run on httplib's worker pool and
// share no engine state.
class HttpServer {
 public:
  explicit HttpServer(Options options = {});
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1 on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop() is called from another thread.
  bool run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cagames::service
