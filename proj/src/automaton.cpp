#include "cagames/automaton.hpp"

#include <algorithm>
#include <string>

#include "cagames/errors.hpp"

namespace cagames {

void validate(const CAParams& params) {
  if (params.right_reach < 0 || params.left_reach < 0) {
    throw DomainError("malformed-spec", "gamma and Gamma must be non-negative");
  }
}

Bit next_cell(std::span<const Bit> parents, const CAParams& params) {
  const auto centre = static_cast<std::size_t>(params.left_reach + 1);
  if (parents[centre - 1] == 0 && parents[centre] == 0) return 0;
  const bool all_ones = std::all_of(parents.begin(), parents.end(), [](Bit b) { return b == 1; });
  return all_ones ? 0 : 1;
}

CASystem::CASystem(CAParams params, BackgroundSpec background)
    : params_(params), background_(std::move(background)) {
  validate(params_);
}

Bit CASystem::cell(std::int64_t x, std::int64_t y) {
  if (y < 0) throw DomainError("invalid-position", "row index must be non-negative");
  if (y == 0) return background_.value(x);
  if (auto it = memo_.find(Key{x, y}); it != memo_.end()) return it->second;

  Bit out = 1;
  if (cell(x - 1, y - 1) == 0 && cell(x, y - 1) == 0) {
    out = 0;
  } else {
    bool all_ones = true;
    for (std::int64_t p = x - params_.left_reach - 1; p <= x + params_.right_reach; ++p) {
      if (cell(p, y - 1) == 0) {
        all_ones = false;
        break;
      }
    }
    if (all_ones) out = 0;
  }
  memo_.emplace(Key{x, y}, out);
  return out;
}

SpacetimeWindow evolve_window(const CAParams& params, const BackgroundSpec& background,
                              std::int64_t x0, std::int64_t x1, std::int64_t rows,
                              std::int64_t cell_budget) {
  validate(params);
  if (x0 > x1) throw DomainError("invalid-window", "x0 must not exceed x1");
  if (rows < 0) throw DomainError("invalid-window", "row count must be non-negative");

  const std::int64_t lo = x0 - rows * (params.left_reach + 1);
  const std::int64_t hi = x1 + rows * params.right_reach;
  const std::int64_t base_width = hi - lo + 1;
  if (base_width > cell_budget || base_width * (rows + 1) > cell_budget) {
    throw ResourceError("window-too-large",
                        "window needs " + std::to_string(base_width) + " x " +
                            std::to_string(rows + 1) + " cells, budget is " +
                            std::to_string(cell_budget));
  }

  SpacetimeWindow window{x0, x1, rows, {}};
  window.cells.resize(static_cast<std::size_t>(window.width() * window.height()));

  // current[i] holds x = lo + i; the live span shrinks as rows advance.
  std::vector<Bit> current(static_cast<std::size_t>(base_width));
  for (std::int64_t i = 0; i < base_width; ++i) current[static_cast<std::size_t>(i)] = background.value(lo + i);
  std::vector<Bit> next(current.size());

  const std::int64_t span = params.window_size();
  auto copy_row = [&](std::int64_t y) {
    std::copy_n(current.begin() + (x0 - lo), window.width(),
                window.cells.begin() + y * window.width());
  };
  copy_row(0);

  std::int64_t live_lo = lo;
  std::int64_t live_hi = hi;
  for (std::int64_t y = 1; y <= rows; ++y) {
    const std::int64_t new_lo = live_lo + params.left_reach + 1;
    const std::int64_t new_hi = live_hi - params.right_reach;
    for (std::int64_t x = new_lo; x <= new_hi; ++x) {
      const auto first = current.begin() + (x - params.left_reach - 1 - lo);
      next[static_cast<std::size_t>(x - lo)] =
          next_cell(std::span<const Bit>(&*first, static_cast<std::size_t>(span)), params);
    }
    std::swap(current, next);
    live_lo = new_lo;
    live_hi = new_hi;
    copy_row(y);
  }
  return window;
}

SpacetimeWindow evolve_window(const CASystem& system, std::int64_t x0, std::int64_t x1,
                              std::int64_t rows, std::int64_t cell_budget) {
  return evolve_window(system.params(), system.background(), x0, x1, rows, cell_budget);
}

RuleTable local_rule_table(const CAParams& params, std::int64_t max_window_bits) {
  validate(params);
  const std::int64_t bits = params.window_size();
  if (bits > max_window_bits) {
    throw ResourceError("table-too-large", "rule table would need " + std::to_string(bits) +
                                               " window bits, cap is " +
                                               std::to_string(max_window_bits));
  }
  RuleTable table{params, bits, {}};
  const std::size_t n = std::size_t{1} << bits;
  table.outputs.resize(n);
  std::vector<Bit> parents(static_cast<std::size_t>(bits));
  for (std::size_t index = 0; index < n; ++index) {
    for (std::int64_t i = 0; i < bits; ++i) {
      parents[static_cast<std::size_t>(i)] = static_cast<Bit>((index >> (bits - 1 - i)) & 1u);
    }
    table.outputs[index] = next_cell(parents, params);
  }
  return table;
}

std::optional<int> elementary_code(const RuleTable& table) {
  if (table.params.left_reach != 0 || table.params.right_reach > 1) return std::nullopt;
  int code = 0;
  for (int lcr = 0; lcr < 8; ++lcr) {
    const int l = (lcr >> 2) & 1, c = (lcr >> 1) & 1, r = lcr & 1;
    const std::size_t index = table.params.right_reach == 1
                                  ? static_cast<std::size_t>((l << 2) | (c << 1) | r)
                                  : static_cast<std::size_t>((l << 1) | c);
    if (table.outputs[index]) code |= 1 << lcr;
  }
  return code;
}

}  // namespace cagames
