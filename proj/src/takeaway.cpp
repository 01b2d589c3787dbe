#include "cagames/takeaway.hpp"

#include <algorithm>

namespace cagames {

std::string_view to_string(Outcome outcome) { return outcome == Outcome::P ? "P" : "N"; }

Outcome negate(Outcome outcome) { return outcome == Outcome::P ? Outcome::N : Outcome::P; }

std::string_view to_string(IllegalClause clause) {
  switch (clause) {
    case IllegalClause::TokenRange: return "token-range";
    case IllegalClause::MatchRange: return "match-range";
    case IllegalClause::BlackToken: return "black-token";
  }
  return "unknown";
}

IllegalMoveError::IllegalMoveError(IllegalClause clause)
    : DomainError("illegal-move", "illegal move (" + std::string(to_string(clause)) + ")",
                  std::string(to_string(clause))),
      clause_(clause) {}

void validate(const GamePosition& pos) {
  if (pos.tokens < 0 || pos.matches < 0 || pos.previous < 0) {
    throw DomainError("invalid-position", "X, Y and m_p must be non-negative");
  }
}

namespace {

// Top `count` tokens left after removing `removed` from the top are white.
bool top_is_white(const GameSpec& spec, std::int64_t remaining, std::int64_t count) {
  for (std::int64_t i = remaining - count + 1; i <= remaining; ++i) {
    if (spec.color(i) != 0) return false;
  }
  return true;
}

}  // namespace

std::optional<IllegalClause> check_move(const GameSpec& spec, const GamePosition& pos, const Move& move) {
  if (move.matches < 1 || move.matches > pos.matches) return IllegalClause::MatchRange;

  const std::int64_t gamma = spec.params.right_reach;
  const std::int64_t lo = gamma * (move.matches - 1);
  const std::int64_t hi = gamma * move.matches + pos.previous + spec.params.left_reach;
  const bool in_range = move.tokens >= lo && move.tokens <= hi && move.tokens <= pos.tokens;
  // Fewer tokens than the lower bound: the whole tape-heap may go.
  const bool clearance = move.tokens == pos.tokens && pos.tokens < lo;
  if (!in_range && !clearance) return IllegalClause::TokenRange;

  if (move.matches == pos.matches) {
    const std::int64_t remaining = pos.tokens - move.tokens;
    if (!top_is_white(spec, remaining, std::min(pos.matches, remaining))) return IllegalClause::BlackToken;
  }
  return std::nullopt;
}

std::vector<Move> legal_moves(const GameSpec& spec, const GamePosition& pos) {
  validate(pos);
  std::vector<Move> moves;
  const std::int64_t gamma = spec.params.right_reach;
  for (std::int64_t m = 1; m <= pos.matches; ++m) {
    const std::int64_t lo = gamma * (m - 1);
    const std::int64_t hi = std::min(gamma * m + pos.previous + spec.params.left_reach, pos.tokens);
    auto consider = [&](std::int64_t t) {
      if (m == pos.matches) {
        const std::int64_t remaining = pos.tokens - t;
        if (!top_is_white(spec, remaining, std::min(pos.matches, remaining))) return;
      }
      moves.push_back(Move{t, m});
    };
    if (pos.tokens < lo) {
      consider(pos.tokens);
    } else {
      for (std::int64_t t = lo; t <= hi; ++t) consider(t);
    }
  }
  return moves;
}

GamePosition apply_move(const GameSpec& spec, const GamePosition& pos, const Move& move) {
  validate(pos);
  if (auto clause = check_move(spec, pos, move)) throw IllegalMoveError(*clause);
  return GamePosition{pos.tokens - move.tokens, pos.matches - move.matches, move.matches};
}

bool supercritical(const CAParams& params, const GamePosition& pos) {
  return pos.tokens >= (params.left_reach + params.right_reach + 1) * pos.matches + pos.previous;
}

TakeawaySolver::TakeawaySolver(GameSpec spec) : spec_(std::move(spec)) { validate(spec_.params); }

Outcome TakeawaySolver::outcome(const GamePosition& pos) {
  validate(pos);
  if (pos.matches == 0) return Outcome::P;
  if (auto it = memo_.find(pos); it != memo_.end()) return it->second;

  Outcome result = Outcome::P;
  for (const Move& move : legal_moves(spec_, pos)) {
    const GamePosition next{pos.tokens - move.tokens, pos.matches - move.matches, move.matches};
    if (outcome(next) == Outcome::P) {
      result = Outcome::N;
      break;
    }
  }
  memo_.emplace(pos, result);
  return result;
}

std::optional<Move> TakeawaySolver::best_move(const GamePosition& pos) {
  for (const Move& move : legal_moves(spec_, pos)) {
    const GamePosition next{pos.tokens - move.tokens, pos.matches - move.matches, move.matches};
    if (outcome(next) == Outcome::P) return move;
  }
  return std::nullopt;
}

Outcome theorem2_predicate(CASystem& system, const GamePosition& pos) {
  validate(pos);
  if (pos.matches == 0 && pos.previous > 0) {
    throw DomainError("out-of-verified-domain",
                      "positions with an empty time-heap and m_p > 0 are not characterised");
  }
  const std::int64_t x = pos.tokens - system.params().right_reach * pos.matches;
  const std::int64_t y = pos.matches;
  for (std::int64_t i = 0; i < pos.previous; ++i) {
    if (system.cell(x, y + i) != 0) return Outcome::N;
  }
  if (y > 0 && system.cell(x, y - 1) != 1) return Outcome::N;
  return Outcome::P;
}

Outcome theorem2_predicate(const GameSpec& spec, const GamePosition& pos) {
  CASystem system(spec.params, spec.background);
  return theorem2_predicate(system, pos);
}

bool in_theorem2_region(const GameSpec& spec, bool zero_left, const GamePosition& pos) {
  if (pos.matches == 0) return pos.previous == 0;
  if (pos.previous == 0) return false;
  if (zero_left) return true;
  const std::int64_t x = pos.tokens - spec.params.right_reach * pos.matches;
  return x >= (spec.params.left_reach + 1) * pos.matches + pos.previous;
}

MismatchReport<GamePosition> verify_theorem2(const GameSpec& spec, const Theorem2Bounds& bounds,
                                             const GamePredicate& predicate) {
  TakeawaySolver solver(spec);
  CASystem system(spec.params, spec.background);
  const bool zero_left = spec.background.zero_at_non_positive();
  MismatchReport<GamePosition> report;
  for (std::int64_t y = 0; y <= bounds.max_matches; ++y) {
    for (std::int64_t x = 0; x <= bounds.max_tokens; ++x) {
      for (std::int64_t mp = 0; mp <= bounds.max_previous; ++mp) {
        const GamePosition pos{x, y, mp};
        if (!in_theorem2_region(spec, zero_left, pos)) continue;
        const Outcome solved = solver.outcome(pos);
        const Outcome claimed = predicate ? predicate(system, pos) : theorem2_predicate(system, pos);
        ++report.checked;
        if (solved != claimed) report.mismatches.push_back({pos, solved, claimed});
      }
    }
  }
  return report;
}

std::string_view to_string(PathFailure failure) {
  switch (failure) {
    case PathFailure::Illegal: return "illegal";
    case PathFailure::NotNBeforeWinnerMove: return "not-N-before-winner-move";
    case PathFailure::NotPAfterWinnerMove: return "not-P-after-winner-move";
  }
  return "unknown";
}

PathVerdict verify_path(TakeawaySolver& solver, const GamePosition& start, const std::vector<Move>& path) {
  validate(start);
  if (path.empty()) return {};
  const std::size_t winner_parity = (path.size() - 1) % 2;
  GamePosition pos = start;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const bool winner_moves = i % 2 == winner_parity;
    if (winner_moves && solver.outcome(pos) != Outcome::N) {
      return {false, i, PathFailure::NotNBeforeWinnerMove};
    }
    if (check_move(solver.spec(), pos, path[i])) return {false, i, PathFailure::Illegal};
    pos = GamePosition{pos.tokens - path[i].tokens, pos.matches - path[i].matches, path[i].matches};
    if (winner_moves && solver.outcome(pos) != Outcome::P) {
      return {false, i, PathFailure::NotPAfterWinnerMove};
    }
  }
  return {};
}

PathVerdict verify_path(const GameSpec& spec, const GamePosition& start, const std::vector<Move>& path) {
  TakeawaySolver solver(spec);
  return verify_path(solver, start, path);
}

}  // namespace cagames
