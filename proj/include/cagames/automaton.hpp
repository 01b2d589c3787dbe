#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cagames/background.hpp"

namespace cagames {

// The two reach parameters of the automaton family. A cell at (x, y) reads
// the parent row over [x - left_reach - 1, x + right_reach]. It becomes 0 iff
// its left and centre parents are both 0 or the whole parent window is 1.
//
// NOTE: the original statement of the rule prints the second zero-condition
// cell with a stray index; it is read as the centre cell x, the only reading
// that reduces to XOR (Wolfram rule 60) when both reaches are 0. With
// right_reach = 1, left_reach = 0 the family is Wolfram code 124, the mirror
// image of rule 110.
struct CAParams {
  std::int64_t right_reach = 0;  // gamma
  std::int64_t left_reach = 0;   // Gamma

  std::int64_t window_size() const { return left_reach + right_reach + 2; }
  friend bool operator==(const CAParams&, const CAParams&) = default;
};

void validate(const CAParams& params);

// Applies the update rule to one parent window of length params.window_size(),
// ordered left to right (x - left_reach - 1 first).
Bit next_cell(std::span<const Bit> parents, const CAParams& params);

// Exact, memoised evaluation of CA(A, gamma, Gamma). Not thread-safe; give
// each concurrent reader its own instance.
class CASystem {
 public:
  CASystem(CAParams params, BackgroundSpec background);

  Bit cell(std::int64_t x, std::int64_t y);

  const CAParams& params() const { return params_; }
  const BackgroundSpec& background() const { return background_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Key {
    std::int64_t x;
    std::int64_t y;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ull;
      h ^= static_cast<std::uint64_t>(k.y) + 0x7F4A7C15ull + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  CAParams params_;
  BackgroundSpec background_;
  std::unordered_map<Key, Bit, KeyHash> memo_;
};

// Rows y in [0, rows] over x in [x0, x1]; at(x, y) is row-major underneath.
struct SpacetimeWindow {
  std::int64_t x0 = 0;
  std::int64_t x1 = 0;
  std::int64_t rows = 0;  // last row index T
  std::vector<Bit> cells;

  std::int64_t width() const { return x1 - x0 + 1; }
  std::int64_t height() const { return rows + 1; }
  Bit at(std::int64_t x, std::int64_t y) const {
    return cells[static_cast<std::size_t>(y * width() + (x - x0))];
  }
  friend bool operator==(const SpacetimeWindow&, const SpacetimeWindow&) = default;
};

inline constexpr std::int64_t kDefaultCellBudget = 10'000'000;

// Evolves the widened base [x0 - T(Gamma+1), x1 + T gamma] row by row, which
// is exact over [x0, x1]. Throws ResourceError("window-too-large") when the
// widened rectangle exceeds cell_budget.
SpacetimeWindow evolve_window(const CAParams& params, const BackgroundSpec& background,
                              std::int64_t x0, std::int64_t x1, std::int64_t rows,
                              std::int64_t cell_budget = kDefaultCellBudget);
SpacetimeWindow evolve_window(const CASystem& system, std::int64_t x0, std::int64_t x1,
                              std::int64_t rows, std::int64_t cell_budget = kDefaultCellBudget);

// Output bit for every parent window, indexed with the leftmost parent as the
// most significant bit.
struct RuleTable {
  CAParams params;
  std::int64_t window_bits = 0;
  std::vector<Bit> outputs;
};

inline constexpr std::int64_t kDefaultTableCap = 20;

RuleTable local_rule_table(const CAParams& params, std::int64_t max_window_bits = kDefaultTableCap);

// The Wolfram code of a table whose window fits inside (left, centre, right).
// Parent windows narrower than three cells ignore the missing neighbours.
std::optional<int> elementary_code(const RuleTable& table);

}  // namespace cagames
