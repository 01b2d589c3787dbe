#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cagames/takeaway.hpp"
#include "cagames/triangle.hpp"

namespace cagames {

// Flat JSON form of a game family and its coloring:
//   {"gamma": 1, "Gamma": 0, "L": "0", "C": "11010011101100", "R": "0", "xi": 0}
// Bit strings list index 1 first. gamma, Gamma, L and R are required; C
// defaults to "" and xi to 0.
struct SpecDocument {
  std::int64_t gamma = 0;
  std::int64_t Gamma = 0;
  std::string L = "0";
  std::string C;
  std::string R = "1";
  std::int64_t xi = 0;

  GameSpec to_game_spec() const;
  static SpecDocument from_game_spec(const GameSpec& spec);

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

// Both throw DomainError("malformed-spec") with a field-specific message.
SpecDocument spec_from_json(const nlohmann::json& value);
SpecDocument parse_spec_document(std::string_view text);

nlohmann::json to_json(const SpecDocument& doc);
std::string serialize(const SpecDocument& doc);

// Wire shapes shared by the CLI and the service.
nlohmann::json to_json(const GamePosition& pos);  // {"X", "Y", "mp"}
nlohmann::json to_json(const Move& move);         // {"t", "m"}
nlohmann::json to_json(const TrianglePosition& pos);  // {"x", "y", "h"}
GamePosition game_position_from_json(const nlohmann::json& value);
Move move_from_json(const nlohmann::json& value);
TrianglePosition triangle_position_from_json(const nlohmann::json& value);

}  // namespace cagames
