#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cagames/automaton.hpp"
#include "cagames/background.hpp"
#include "cagames/errors.hpp"

namespace cagames {

// Parameters of a take-away game family plus the coloring: token i (1 at the
// bottom) is black iff background.value(i) == 1. The coloring shift lives in
// the background.
struct GameSpec {
  CAParams params;
  BackgroundSpec background;

  Bit color(std::int64_t token) const { return background.value(token); }
};

// Tape-heap size, time-heap size, and the number of matches the previous
// player removed.
struct GamePosition {
  std::int64_t tokens = 0;
  std::int64_t matches = 0;
  std::int64_t previous = 0;

  friend bool operator==(const GamePosition&, const GamePosition&) = default;
};

struct Move {
  std::int64_t tokens = 0;
  std::int64_t matches = 1;

  friend bool operator==(const Move&, const Move&) = default;
};

enum class Outcome { P, N };

std::string_view to_string(Outcome outcome);
Outcome negate(Outcome outcome);

enum class IllegalClause { TokenRange, MatchRange, BlackToken };

std::string_view to_string(IllegalClause clause);

class IllegalMoveError : public DomainError {
 public:
  explicit IllegalMoveError(IllegalClause clause);
  IllegalClause clause() const noexcept { return clause_; }

 private:
  IllegalClause clause_;
};

void validate(const GamePosition& pos);

// Why `move` is illegal from `pos`, or nullopt when it is legal.
std::optional<IllegalClause> check_move(const GameSpec& spec, const GamePosition& pos, const Move& move);

// Ascending matches, then ascending tokens.
std::vector<Move> legal_moves(const GameSpec& spec, const GamePosition& pos);

GamePosition apply_move(const GameSpec& spec, const GamePosition& pos, const Move& move);

bool supercritical(const CAParams& params, const GamePosition& pos);

// Normal-play solver, memoised on (tokens, matches, previous).
class TakeawaySolver {
 public:
  explicit TakeawaySolver(GameSpec spec);

  Outcome outcome(const GamePosition& pos);
  // First move (in legal_moves order) to a P position; nullopt iff pos is P.
  std::optional<Move> best_move(const GamePosition& pos);

  const GameSpec& spec() const { return spec_; }

 private:
  struct KeyHash {
    std::size_t operator()(const GamePosition& p) const noexcept {
      std::uint64_t h = static_cast<std::uint64_t>(p.tokens);
      h = h * 0x100000001B3ull ^ static_cast<std::uint64_t>(p.matches);
      h = h * 0x100000001B3ull ^ static_cast<std::uint64_t>(p.previous);
      return static_cast<std::size_t>(h * 0x9E3779B97F4A7C15ull);
    }
  };

  GameSpec spec_;
  std::unordered_map<GamePosition, Outcome, KeyHash> memo_;
};

// The automaton-side characterisation of P positions. With x = X - gamma*Y
// and y = Y, the position is P iff cells (x, y) .. (x, y + m_p - 1) are all 0
// and, when y > 0, cell (x, y - 1) is 1. Positions with no matches but a
// positive m_p are outside the characterised domain and are refused with
// DomainError("out-of-verified-domain").
Outcome theorem2_predicate(CASystem& system, const GamePosition& pos);
Outcome theorem2_predicate(const GameSpec& spec, const GamePosition& pos);

template <class Position>
struct Mismatch {
  Position position;
  Outcome solver;
  Outcome predicate;
};

template <class Position>
struct MismatchReport {
  std::int64_t checked = 0;
  std::vector<Mismatch<Position>> mismatches;

  bool empty() const { return mismatches.empty(); }
};

struct Theorem2Bounds {
  std::int64_t max_tokens = 0;
  std::int64_t max_matches = 0;
  std::int64_t max_previous = 0;
};

// Replaces the predicate under test; used to self-test the harness.
using GamePredicate = std::function<Outcome(CASystem&, const GamePosition&)>;

// True when (pos) lies in the region where the characterisation is checked.
// Positions with matches >= 1 need m_p >= 1 (every real move removes a match;
// with m_p = 0 the characterisation fails, e.g. rule 110 at (3, 1, 0)); the
// only matches = 0 position checked is m_p = 0. If the background is not zero
// at every non-positive index, X - gamma*Y >= (Gamma+1)*Y + m_p is required.
bool in_theorem2_region(const GameSpec& spec, bool zero_left, const GamePosition& pos);

MismatchReport<GamePosition> verify_theorem2(const GameSpec& spec, const Theorem2Bounds& bounds,
                                             const GamePredicate& predicate = {});

enum class PathFailure { Illegal, NotNBeforeWinnerMove, NotPAfterWinnerMove };

std::string_view to_string(PathFailure failure);

struct PathVerdict {
  bool optimal = true;
  std::size_t index = 0;  // offending move when !optimal
  PathFailure reason = PathFailure::Illegal;
};

// The player making the last move of `path` is the claimed winner. The path
// is optimal iff every move is legal, every position that player faces is N,
// and each of that player's moves lands on a P position.
PathVerdict verify_path(TakeawaySolver& solver, const GamePosition& start, const std::vector<Move>& path);
PathVerdict verify_path(const GameSpec& spec, const GamePosition& start, const std::vector<Move>& path);

}  // namespace cagames
