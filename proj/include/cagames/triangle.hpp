#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cagames/takeaway.hpp"

namespace cagames {

// A placed triangle: top at (x, y + h), base row y, base-sensor on row y - 1
// over [x - (Gamma + 1 + h), x + gamma], IRT-sensor base over [x - h, x].
struct TrianglePosition {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t h = 0;

  friend bool operator==(const TrianglePosition&, const TrianglePosition&) = default;
};

struct TriangleMove {
  std::int64_t x = 0;
  std::int64_t h = 0;

  friend bool operator==(const TriangleMove&, const TriangleMove&) = default;
};

enum class PlacementClause { Column, Height, EndingCondition };

std::string_view to_string(PlacementClause clause);

class IllegalPlacementError : public DomainError {
 public:
  explicit IllegalPlacementError(PlacementClause clause);
  PlacementClause clause() const noexcept { return clause_; }

 private:
  PlacementClause clause_;
};

void validate(const TrianglePosition& pos);

// The new top must sit on the previous base-sensor, one row below the old
// base, so heights range over [0, y - 1]. A triangle landing on row 0 must
// have an IRT-sensor covering only zeros.
std::optional<PlacementClause> check_placement(const GameSpec& spec, const TrianglePosition& pos,
                                               const TriangleMove& move);

// Ascending height, then ascending column.
std::vector<TriangleMove> tri_legal_moves(const GameSpec& spec, const TrianglePosition& pos);

TrianglePosition tri_apply(const GameSpec& spec, const TrianglePosition& pos, const TriangleMove& move);

class TriangleSolver {
 public:
  explicit TriangleSolver(GameSpec spec);

  Outcome outcome(const TrianglePosition& pos);

  const GameSpec& spec() const { return spec_; }

 private:
  struct KeyHash {
    std::size_t operator()(const TrianglePosition& p) const noexcept {
      std::uint64_t h = static_cast<std::uint64_t>(p.x);
      h = h * 0x100000001B3ull ^ static_cast<std::uint64_t>(p.y);
      h = h * 0x100000001B3ull ^ static_cast<std::uint64_t>(p.h);
      return static_cast<std::size_t>(h * 0x9E3779B97F4A7C15ull);
    }
  };

  GameSpec spec_;
  std::unordered_map<TrianglePosition, Outcome, KeyHash> memo_;
};

// P iff the IRT-sensor base (x - h .. x on row y) is all 0 and, when y > 0,
// the base-sensor on row y - 1 is all 1.
Outcome theorem3_predicate(CASystem& system, const TrianglePosition& pos);
Outcome theorem3_predicate(const GameSpec& spec, const TrianglePosition& pos);

struct Theorem3Bounds {
  std::int64_t min_x = 0;
  std::int64_t max_x = 0;
  std::int64_t max_row = 0;
  std::int64_t max_height = 0;
};

// Row-0 positions whose IRT-sensor covers a 1 cannot be placed and are
// skipped; everything else in the box is compared.
bool in_theorem3_region(const BackgroundSpec& background, const TrianglePosition& pos);

using TrianglePredicate = std::function<Outcome(CASystem&, const TrianglePosition&)>;

MismatchReport<TrianglePosition> verify_theorem3(const GameSpec& spec, const Theorem3Bounds& bounds,
                                                 const TrianglePredicate& predicate = {});

}  // namespace cagames
