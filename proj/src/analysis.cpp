#include "cagames/analysis.hpp"

#include <algorithm>

#include "cagames/errors.hpp"

namespace cagames {

std::pair<std::int64_t, std::int64_t> required_columns(const CAParams& params,
                                                       const BackgroundSpec& background,
                                                       std::int64_t last_row) {
  const std::int64_t core_lo = background.center_first() - 1;
  const std::int64_t core_hi = background.center_last() + 1;
  return {core_lo - last_row * params.right_reach, core_hi + last_row * (params.left_reach + 1)};
}

PeriodicityVerdict detect_periodicity(const CASystem& system, const PeriodSearch& search) {
  if (search.max_period < 1) throw DomainError("invalid-bounds", "max period must be at least 1");
  if (search.max_drift < 0 || search.burn_in < 0 || search.x0 > search.x1) {
    throw DomainError("invalid-bounds", "drift, burn-in and columns must be well-formed");
  }
  const auto [need_lo, need_hi] = required_columns(system.params(), system.background(), search.last_row);
  if (search.x0 > need_lo || search.x1 < need_hi) {
    throw DomainError("insufficient-window", "columns must cover [" + std::to_string(need_lo) + ", " +
                                                 std::to_string(need_hi) + "]");
  }

  const SpacetimeWindow window =
      evolve_window(system, search.x0, search.x1 + search.max_drift, search.last_row,
                    search.cell_budget);

  for (std::int64_t rho = 1; rho <= search.max_period; ++rho) {
    const std::int64_t last = search.last_row - rho;
    if (last < search.burn_in) break;
    const std::int64_t span = last - search.burn_in + 1;
    for (std::int64_t delta = 0; delta <= search.max_drift; ++delta) {
      // Walk downwards from the last comparable row to find the onset.
      std::int64_t onset = last + 1;
      for (std::int64_t y = last; y >= search.burn_in; --y) {
        bool row_ok = true;
        for (std::int64_t x = search.x0; x <= search.x1 && row_ok; ++x) {
          row_ok = window.at(x, y) == window.at(x + delta, y + rho);
        }
        if (!row_ok) break;
        onset = y;
      }
      if (2 * (last - onset + 1) >= span) return {true, delta, rho, onset};
    }
  }
  return {};
}

std::int64_t transfer_period(std::int64_t drift, std::int64_t period, std::int64_t gamma) {
  if (period < 1) throw DomainError("invalid-bounds", "period must be at least 1");
  return drift + gamma * period;
}

GamePeriodReport check_game_periodicity(TakeawaySolver& solver, std::int64_t drift, std::int64_t period,
                                        const GamePeriodBounds& bounds) {
  if (drift < 0 || period < 1) throw DomainError("invalid-bounds", "need drift >= 0 and period >= 1");
  const CAParams& params = solver.spec().params;
  GamePeriodReport report;
  for (std::int64_t y = std::max<std::int64_t>(bounds.burn_in, 1); y <= bounds.max_matches; ++y) {
    for (std::int64_t mp = 1; mp <= bounds.max_previous; ++mp) {
      for (std::int64_t x = 0; x <= bounds.max_tokens; ++x) {
        const GamePosition pos{x, y, mp};
        const GamePosition shifted{x + drift, y + period, mp};
        if (!supercritical(params, pos) || !supercritical(params, shifted)) continue;
        const Outcome here = solver.outcome(pos);
        const Outcome there = solver.outcome(shifted);
        ++report.checked;
        if (here != there) report.mismatches.push_back({pos, here, there});
      }
    }
  }
  return report;
}

GamePeriodReport check_game_periodicity(const GameSpec& spec, std::int64_t drift, std::int64_t period,
                                        const GamePeriodBounds& bounds) {
  TakeawaySolver solver(spec);
  return check_game_periodicity(solver, drift, period, bounds);
}

ConvergenceVerdict check_convergence(const CASystem& a, const CASystem& b, std::int64_t y_from,
                                     std::int64_t y_to, std::int64_t x0, std::int64_t x1,
                                     std::int64_t cell_budget) {
  if (!(a.params() == b.params())) {
    throw DomainError("params-mismatch", "convergence needs systems with equal gamma and Gamma");
  }
  if (y_from < 0 || y_from > y_to) throw DomainError("invalid-bounds", "need 0 <= y_from <= y_to");
  const SpacetimeWindow wa = evolve_window(a, x0, x1, y_to, cell_budget);
  const SpacetimeWindow wb = evolve_window(b, x0, x1, y_to, cell_budget);
  for (std::int64_t y = y_from; y <= y_to; ++y) {
    for (std::int64_t x = x0; x <= x1; ++x) {
      if (wa.at(x, y) != wb.at(x, y)) return {true, x, y};
    }
  }
  return {};
}

std::vector<PatternHit> find_pattern(const CASystem& system, const Bits& pattern, bool include_reversed,
                                     std::int64_t x0, std::int64_t x1, std::int64_t y_from,
                                     std::int64_t y_to, std::int64_t cell_budget) {
  if (pattern.empty()) throw DomainError("invalid-pattern", "pattern must be non-empty");
  if (y_from < 0 || y_from > y_to) throw DomainError("invalid-bounds", "need 0 <= y_from <= y_to");
  std::vector<PatternHit> hits;
  const auto len = static_cast<std::int64_t>(pattern.size());
  if (x1 - x0 + 1 < len) return hits;

  const Bits reversed(pattern.rbegin(), pattern.rend());
  const bool search_reversed = include_reversed && reversed != pattern;
  const SpacetimeWindow window = evolve_window(system, x0, x1, y_to, cell_budget);
  auto matches_at = [&](const Bits& word, std::int64_t x, std::int64_t y) {
    for (std::int64_t i = 0; i < len; ++i) {
      if (window.at(x + i, y) != word[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  };
  for (std::int64_t y = y_from; y <= y_to; ++y) {
    for (std::int64_t x = x0; x + len - 1 <= x1; ++x) {
      if (matches_at(pattern, x, y)) hits.push_back({x, y, false});
      if (search_reversed && matches_at(reversed, x, y)) hits.push_back({x, y, true});
    }
  }
  return hits;
}

}  // namespace cagames
