#include "cagames/triangle.hpp"

#include <string>

namespace cagames {

std::string_view to_string(PlacementClause clause) {
  switch (clause) {
    case PlacementClause::Column: return "column";
    case PlacementClause::Height: return "height";
    case PlacementClause::EndingCondition: return "ending-condition";
  }
  return "unknown";
}

IllegalPlacementError::IllegalPlacementError(PlacementClause clause)
    : DomainError("illegal-placement", "illegal placement (" + std::string(to_string(clause)) + ")",
                  std::string(to_string(clause))),
      clause_(clause) {}

void validate(const TrianglePosition& pos) {
  if (pos.y < 0 || pos.h < 0) throw DomainError("invalid-position", "y and h must be non-negative");
}

namespace {

bool height_allowed(std::int64_t y, std::int64_t h) {
  return h >= 0 && h <= y - 1;
}

bool irt_base_clear(const BackgroundSpec& background, std::int64_t x, std::int64_t h) {
  for (std::int64_t j = 0; j <= h; ++j) {
    if (background.value(x - j) != 0) return false;
  }
  return true;
}

}  // namespace

std::optional<PlacementClause> check_placement(const GameSpec& spec, const TrianglePosition& pos,
                                               const TriangleMove& move) {
  const std::int64_t lo = pos.x - (spec.params.left_reach + 1 + pos.h);
  const std::int64_t hi = pos.x + spec.params.right_reach;
  if (move.x < lo || move.x > hi) return PlacementClause::Column;
  if (pos.y == 0 || !height_allowed(pos.y, move.h)) return PlacementClause::Height;
  if (pos.y - 1 - move.h == 0 && !irt_base_clear(spec.background, move.x, move.h)) {
    return PlacementClause::EndingCondition;
  }
  return std::nullopt;
}

std::vector<TriangleMove> tri_legal_moves(const GameSpec& spec, const TrianglePosition& pos) {
  validate(pos);
  std::vector<TriangleMove> moves;
  if (pos.y == 0) return moves;
  const std::int64_t lo = pos.x - (spec.params.left_reach + 1 + pos.h);
  const std::int64_t hi = pos.x + spec.params.right_reach;
  for (std::int64_t h = 0; h <= pos.y - 1; ++h) {
    const bool lands_on_floor = pos.y - 1 - h == 0;
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (lands_on_floor && !irt_base_clear(spec.background, x, h)) continue;
      moves.push_back(TriangleMove{x, h});
    }
  }
  return moves;
}

TrianglePosition tri_apply(const GameSpec& spec, const TrianglePosition& pos, const TriangleMove& move) {
  validate(pos);
  if (auto clause = check_placement(spec, pos, move)) throw IllegalPlacementError(*clause);
  return TrianglePosition{move.x, pos.y - 1 - move.h, move.h};
}

TriangleSolver::TriangleSolver(GameSpec spec) : spec_(std::move(spec)) { validate(spec_.params); }

Outcome TriangleSolver::outcome(const TrianglePosition& pos) {
  validate(pos);
  if (pos.y == 0) return Outcome::P;
  if (auto it = memo_.find(pos); it != memo_.end()) return it->second;

  Outcome result = Outcome::P;
  for (const TriangleMove& move : tri_legal_moves(spec_, pos)) {
    if (outcome(TrianglePosition{move.x, pos.y - 1 - move.h, move.h}) == Outcome::P) {
      result = Outcome::N;
      break;
    }
  }
  memo_.emplace(pos, result);
  return result;
}

Outcome theorem3_predicate(CASystem& system, const TrianglePosition& pos) {
  validate(pos);
  for (std::int64_t j = 0; j <= pos.h; ++j) {
    if (system.cell(pos.x - j, pos.y) != 0) return Outcome::N;
  }
  if (pos.y > 0) {
    const auto& p = system.params();
    for (std::int64_t c = pos.x - (p.left_reach + 1 + pos.h); c <= pos.x + p.right_reach; ++c) {
      if (system.cell(c, pos.y - 1) != 1) return Outcome::N;
    }
  }
  return Outcome::P;
}

Outcome theorem3_predicate(const GameSpec& spec, const TrianglePosition& pos) {
  CASystem system(spec.params, spec.background);
  return theorem3_predicate(system, pos);
}

bool in_theorem3_region(const BackgroundSpec& background, const TrianglePosition& pos) {
  return pos.y > 0 || irt_base_clear(background, pos.x, pos.h);
}

MismatchReport<TrianglePosition> verify_theorem3(const GameSpec& spec, const Theorem3Bounds& bounds,
                                                 const TrianglePredicate& predicate) {
  TriangleSolver solver(spec);
  CASystem system(spec.params, spec.background);
  MismatchReport<TrianglePosition> report;
  for (std::int64_t y = 0; y <= bounds.max_row; ++y) {
    for (std::int64_t x = bounds.min_x; x <= bounds.max_x; ++x) {
      for (std::int64_t h = 0; h <= bounds.max_height; ++h) {
        const TrianglePosition pos{x, y, h};
        if (!in_theorem3_region(spec.background, pos)) continue;
        const Outcome solved = solver.outcome(pos);
        const Outcome claimed = predicate ? predicate(system, pos) : theorem3_predicate(system, pos);
        ++report.checked;
        if (solved != claimed) report.mismatches.push_back({pos, solved, claimed});
      }
    }
  }
  return report;
}

}  // namespace cagames
