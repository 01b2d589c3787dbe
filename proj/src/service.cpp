#include "cagames/service.hpp"

#include <httplib.h>

#include "cagames/errors.hpp"
#include "cagames/spec_document.hpp"
#include "cagames/takeaway.hpp"
#include "cagames/triangle.hpp"

namespace cagames::service {

using nlohmann::json;

namespace {

const json& field(const json& request, const char* key) {
  if (!request.is_object() || !request.contains(key)) {
    throw DomainError("malformed-request", std::string("missing field '") + key + "'");
  }
  return request.at(key);
}

std::int64_t integer(const json& request, const char* key) {
  const json& v = field(request, key);
  if (!v.is_number_integer()) {
    throw DomainError("malformed-request", std::string("field '") + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

GameSpec spec_of(const json& request) { return spec_from_json(field(request, "spec")).to_game_spec(); }

int status_for(const Error& error) {
  const std::string& code = error.code();
  if (code == "malformed-request" || code == "malformed-spec") return 400;
  return 422;
}

json error_body(const Error& error) {
  json body{{"code", error.code()}, {"message", error.what()}};
  if (!error.detail().empty()) body["detail"] = error.detail();
  if (const auto* illegal = dynamic_cast<const IllegalMoveError*>(&error)) {
    body["clause"] = std::string(to_string(illegal->clause()));
  }
  if (const auto* illegal = dynamic_cast<const IllegalPlacementError*>(&error)) {
    body["clause"] = std::string(to_string(illegal->clause()));
  }
  return body;
}

}  // namespace

json ca_window(const json& request, const Options& options) {
  const GameSpec spec = spec_of(request);
  const std::int64_t x0 = integer(request, "x0");
  const std::int64_t x1 = integer(request, "x1");
  const std::int64_t rows = integer(request, "rows");
  const SpacetimeWindow window = evolve_window(spec.params, spec.background, x0, x1, rows, options.cell_budget);
  json cells = json::array();
  for (std::int64_t y = 0; y <= rows; ++y) {
    json row = json::array();
    for (std::int64_t x = x0; x <= x1; ++x) row.push_back(window.at(x, y));
    cells.push_back(std::move(row));
  }
  return json{{"cells", std::move(cells)}, {"x0", x0}, {"x1", x1}, {"rows", rows}};
}

json game_moves(const json& request) {
  const GameSpec spec = spec_of(request);
  const GamePosition pos = game_position_from_json(field(request, "position"));
  json moves = json::array();
  for (const Move& move : legal_moves(spec, pos)) moves.push_back(to_json(move));
  return json{{"moves", std::move(moves)}};
}

json game_apply(const json& request) {
  const GameSpec spec = spec_of(request);
  const GamePosition pos = game_position_from_json(field(request, "position"));
  const Move move = move_from_json(field(request, "move"));
  return json{{"position", to_json(apply_move(spec, pos, move))}};
}

json game_outcome(const json& request) {
  TakeawaySolver solver(spec_of(request));
  const GamePosition pos = game_position_from_json(field(request, "position"));
  const Outcome outcome = solver.outcome(pos);
  const auto best = solver.best_move(pos);
  return json{{"outcome", std::string(to_string(outcome))},
              {"bestMove", best ? to_json(*best) : json(nullptr)}};
}

json game_predicate(const json& request) {
  const GameSpec spec = spec_of(request);
  const GamePosition pos = game_position_from_json(field(request, "position"));
  return json{{"outcome", std::string(to_string(theorem2_predicate(spec, pos)))}};
}

json triangle_outcome(const json& request) {
  const GameSpec spec = spec_of(request);
  const TrianglePosition pos = triangle_position_from_json(field(request, "position"));
  TriangleSolver solver(spec);
  return json{{"outcome", std::string(to_string(solver.outcome(pos)))},
              {"predicate", std::string(to_string(theorem3_predicate(spec, pos)))}};
}

json health() { return json{{"status", "ok"}, {"version", kVersion}}; }

Response dispatch(std::string_view method, std::string_view path, std::string_view body,
                  const Options& options) {
  try {
    if (path == "/api/health") {
      if (method != "GET") return {405, json{{"code", "method-not-allowed"}, {"message", "use GET"}}};
      return {200, health()};
    }
    using Handler = json (*)(const json&);
    static const std::pair<std::string_view, Handler> routes[] = {
        {"/api/game/moves", game_moves},         {"/api/game/apply", game_apply},
        {"/api/game/outcome", game_outcome},     {"/api/game/predicate", game_predicate},
        {"/api/triangle/outcome", triangle_outcome},
    };
    const bool is_window = path == "/api/ca/window";
    Handler handler = nullptr;
    for (const auto& [route, h] : routes) {
      if (route == path) handler = h;
    }
    if (!is_window && handler == nullptr) {
      return {404, json{{"code", "not-found"}, {"message", "unknown endpoint"}}};
    }
    if (method != "POST") return {405, json{{"code", "method-not-allowed"}, {"message", "use POST"}}};

    json request = json::parse(body.begin(), body.end(), nullptr, false);
    if (request.is_discarded() || !request.is_object()) {
      return {400, json{{"code", "malformed-request"}, {"message", "body must be a JSON object"}}};
    }
    return {200, is_window ? ca_window(request, options) : handler(request)};
  } catch (const Error& error) {
    return {status_for(error), error_body(error)};
  } catch (const json::exception& error) {
    return {400, json{{"code", "malformed-request"}, {"message", error.what()}}};
  }
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Options options) : impl_(std::make_unique<Impl>()) {
  auto handle = [options](const httplib::Request& req, httplib::Response& res) {
    const Response out = dispatch(req.method, req.path, req.body, options);
    res.status = out.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(out.body.dump(), "application/json");
  };
  impl_->server.Get(R"(/api/.*)", handle);
  impl_->server.Post(R"(/api/.*)", handle);
  impl_->server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::run() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace cagames::service
