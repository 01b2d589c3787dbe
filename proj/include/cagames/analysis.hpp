#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cagames/automaton.hpp"
#include "cagames/takeaway.hpp"

namespace cagames {

// Bounded evidence gathering. Eventual periodicity and convergence of these
// automata are undecidable in general, so every verdict below is relative to
// the scanned window and never a proof.

struct PeriodSearch {
  std::int64_t max_drift = 0;   // delta in [0, max_drift]
  std::int64_t max_period = 1;  // rho in [1, max_period]
  std::int64_t burn_in = 0;     // first row considered
  std::int64_t x0 = 0;          // checked columns
  std::int64_t x1 = 0;
  std::int64_t last_row = 0;    // last row evaluated
  std::int64_t cell_budget = kDefaultCellBudget;
};

struct PeriodicityVerdict {
  bool periodic = false;
  std::int64_t drift = 0;   // delta
  std::int64_t period = 0;  // rho
  std::int64_t onset = 0;   // y0
};

// The columns a search must cover so the centre word's influence cone (both
// junctions included) stays inside the window up to last_row.
std::pair<std::int64_t, std::int64_t> required_columns(const CAParams& params,
                                                       const BackgroundSpec& background,
                                                       std::int64_t last_row);

// Tries (rho, delta) with rho ascending, then delta ascending. A candidate is
// accepted when cell(x, y) == cell(x + delta, y + rho) for every checked x and
// every y in [onset, last_row - rho], where onset >= burn_in is minimal and the
// agreeing rows cover at least half of [burn_in, last_row - rho]. Throws
// DomainError("insufficient-window") if the columns miss required_columns().
PeriodicityVerdict detect_periodicity(const CASystem& system, const PeriodSearch& search);

// Spatial period of the game outcomes on super-critical tape-heaps given an
// automaton period (delta, rho): delta + gamma * rho. The time period is rho.
std::int64_t transfer_period(std::int64_t drift, std::int64_t period, std::int64_t gamma);

struct GamePeriodBounds {
  std::int64_t max_tokens = 0;
  std::int64_t max_matches = 0;
  std::int64_t max_previous = 1;
  std::int64_t burn_in = 0;  // smallest Y compared
};

struct PeriodMismatch {
  GamePosition position;
  Outcome outcome;
  Outcome shifted_outcome;
};

struct GamePeriodReport {
  std::int64_t checked = 0;
  std::vector<PeriodMismatch> mismatches;
  bool empty() const { return mismatches.empty(); }
};

// Compares (X, Y, m_p) with (X + drift, Y + period, m_p) over positions with
// Y >= burn_in, 1 <= m_p <= max_previous, both sides super-critical.
GamePeriodReport check_game_periodicity(const GameSpec& spec, std::int64_t drift, std::int64_t period,
                                        const GamePeriodBounds& bounds);
GamePeriodReport check_game_periodicity(TakeawaySolver& solver, std::int64_t drift, std::int64_t period,
                                        const GamePeriodBounds& bounds);

struct ConvergenceVerdict {
  bool diverges = false;  // true: (x, y) is a witness
  std::int64_t x = 0;
  std::int64_t y = 0;
};

// First (y ascending, then x ascending) cell of rows [y_from, y_to] and
// columns [x0, x1] where the two systems differ. Throws
// DomainError("params-mismatch") if the systems use different parameters.
ConvergenceVerdict check_convergence(const CASystem& a, const CASystem& b, std::int64_t y_from,
                                     std::int64_t y_to, std::int64_t x0, std::int64_t x1,
                                     std::int64_t cell_budget = kDefaultCellBudget);

struct PatternHit {
  std::int64_t x = 0;  // leftmost cell
  std::int64_t y = 0;
  bool reversed = false;

  friend bool operator==(const PatternHit&, const PatternHit&) = default;
};

// The marker whose appearance signals the F-glider in rule 110 runs.
inline constexpr const char* kGliderMarker = "01101001101000";

// Occurrences lying entirely inside [x0, x1] on rows [y_from, y_to], sorted by
// (y, x), forward before reversed. Palindromes are reported once.
std::vector<PatternHit> find_pattern(const CASystem& system, const Bits& pattern, bool include_reversed,
                                     std::int64_t x0, std::int64_t x1, std::int64_t y_from,
                                     std::int64_t y_to, std::int64_t cell_budget = kDefaultCellBudget);

}  // namespace cagames
