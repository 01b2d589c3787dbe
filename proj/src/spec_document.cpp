#include "cagames/spec_document.hpp"

#include "cagames/errors.hpp"

namespace cagames {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& message, const std::string& code = "malformed-spec") {
  throw DomainError(code, message);
}

std::int64_t integer_field(const json& obj, const char* key, const std::string& code,
                           std::optional<std::int64_t> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    malformed(std::string("missing field '") + key + "'", code);
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) malformed(std::string("field '") + key + "' must be an integer", code);
  return v.get<std::int64_t>();
}

std::string bits_field(const json& obj, const char* key, bool required) {
  if (!obj.contains(key)) {
    if (required) malformed(std::string("missing field '") + key + "'");
    return {};
  }
  const json& v = obj.at(key);
  if (!v.is_string()) malformed(std::string("field '") + key + "' must be a string over {0,1}");
  auto text = v.get<std::string>();
  if (text.find_first_not_of("01") != std::string::npos) {
    malformed(std::string("field '") + key + "' may only contain '0' and '1'");
  }
  return text;
}

}  // namespace

GameSpec SpecDocument::to_game_spec() const {
  return GameSpec{CAParams{gamma, Gamma}, BackgroundSpec::from_strings(L, C, R, xi)};
}

SpecDocument SpecDocument::from_game_spec(const GameSpec& spec) {
  const auto& bg = spec.background;
  return SpecDocument{spec.params.right_reach, spec.params.left_reach, format_bits(bg.left()),
                      format_bits(bg.center()), format_bits(bg.right()), bg.shift()};
}

SpecDocument spec_from_json(const json& value) {
  if (!value.is_object()) malformed("spec must be a JSON object");
  SpecDocument doc;
  doc.gamma = integer_field(value, "gamma", "malformed-spec");
  doc.Gamma = integer_field(value, "Gamma", "malformed-spec");
  if (doc.gamma < 0 || doc.Gamma < 0) malformed("gamma and Gamma must be non-negative");
  doc.L = bits_field(value, "L", true);
  doc.C = bits_field(value, "C", false);
  doc.R = bits_field(value, "R", true);
  if (doc.L.empty() || doc.R.empty()) malformed("L and R must be non-empty");
  doc.xi = integer_field(value, "xi", "malformed-spec", 0);
  return doc;
}

SpecDocument parse_spec_document(std::string_view text) {
  json value = json::parse(text.begin(), text.end(), nullptr, false);
  if (value.is_discarded()) malformed("spec is not valid JSON");
  return spec_from_json(value);
}

json to_json(const SpecDocument& doc) {
  return json{{"gamma", doc.gamma}, {"Gamma", doc.Gamma}, {"L", doc.L},
              {"C", doc.C},         {"R", doc.R},         {"xi", doc.xi}};
}

std::string serialize(const SpecDocument& doc) { return to_json(doc).dump(); }

json to_json(const GamePosition& pos) {
  return json{{"X", pos.tokens}, {"Y", pos.matches}, {"mp", pos.previous}};
}

json to_json(const Move& move) { return json{{"t", move.tokens}, {"m", move.matches}}; }

json to_json(const TrianglePosition& pos) { return json{{"x", pos.x}, {"y", pos.y}, {"h", pos.h}}; }

GamePosition game_position_from_json(const json& value) {
  if (!value.is_object()) malformed("position must be an object", "malformed-request");
  return GamePosition{integer_field(value, "X", "malformed-request"),
                      integer_field(value, "Y", "malformed-request"),
                      integer_field(value, "mp", "malformed-request")};
}

Move move_from_json(const json& value) {
  if (!value.is_object()) malformed("move must be an object", "malformed-request");
  return Move{integer_field(value, "t", "malformed-request"), integer_field(value, "m", "malformed-request")};
}

TrianglePosition triangle_position_from_json(const json& value) {
  if (!value.is_object()) malformed("position must be an object", "malformed-request");
  return TrianglePosition{integer_field(value, "x", "malformed-request"),
                          integer_field(value, "y", "malformed-request"),
                          integer_field(value, "h", "malformed-request")};
}

}  // namespace cagames
