#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the engine's evaluation paths; each oracle restates its definition
// directly.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

// C(n, k) mod 2 by Lucas' theorem: odd iff every bit of k is set in n.
inline int binomial_parity(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return (k & ~n) == 0 ? 1 : 0;
}

// Rule 60 over the step background (1 exactly at x >= 1).
inline int pascal_cell(std::int64_t x, std::int64_t y) {
  if (y == 0) return x >= 1 ? 1 : 0;
  return binomial_parity(y - 1, x - 1);
}

using Background = std::function<int(std::int64_t)>;

// Literal evolution of the rule: a cell is 0 if its left and centre parents
// are 0, or if all parents from x - Gamma - 1 to x + gamma are 1.
// rows[y][x - x0] for y in [0, last_row].
inline std::vector<std::vector<int>> evolve(int gamma, int Gamma, const Background& a, std::int64_t x0,
                                            std::int64_t x1, std::int64_t last_row) {
  const std::int64_t lo = x0 - last_row * (Gamma + 1);
  const std::int64_t hi = x1 + last_row * gamma;
  std::vector<int> row;
  for (std::int64_t x = lo; x <= hi; ++x) row.push_back(a(x));
  std::vector<std::vector<int>> out;
  auto keep = [&](const std::vector<int>& r) {
    out.emplace_back(r.begin() + (x0 - lo), r.begin() + (x1 - lo) + 1);
  };
  keep(row);
  for (std::int64_t y = 1; y <= last_row; ++y) {
    std::vector<int> next(row.size(), 0);
    for (std::int64_t i = y * (Gamma + 1); i < static_cast<std::int64_t>(row.size()) - y * gamma; ++i) {
      const bool pair_zero = row[i - 1] == 0 && row[i] == 0;
      bool ones = true;
      for (std::int64_t j = i - Gamma - 1; j <= i + gamma; ++j) ones = ones && row[j] == 1;
      next[i] = (pair_zero || ones) ? 0 : 1;
    }
    row = next;
    keep(row);
  }
  return out;
}

struct Hit {
  std::int64_t x;
  std::int64_t y;
  bool reversed;
  bool operator==(const Hit&) const = default;
};

// Every start column of every row, compared character by character.
inline std::vector<Hit> scan(const std::vector<std::vector<int>>& rows, std::int64_t x0, std::int64_t y0,
                             const std::vector<int>& pattern, bool with_reversed) {
  std::vector<int> rev(pattern.rbegin(), pattern.rend());
  const bool palindrome = rev == pattern;
  std::vector<Hit> hits;
  for (std::size_t y = 0; y < rows.size(); ++y) {
    const auto& r = rows[y];
    for (std::size_t s = 0; s + pattern.size() <= r.size(); ++s) {
      bool fwd = true, bwd = true;
      for (std::size_t i = 0; i < pattern.size(); ++i) {
        fwd = fwd && r[s + i] == pattern[i];
        bwd = bwd && r[s + i] == rev[i];
      }
      const auto x = x0 + static_cast<std::int64_t>(s);
      const auto yy = y0 + static_cast<std::int64_t>(y);
      if (fwd) hits.push_back({x, yy, false});
      if (with_reversed && !palindrome && bwd) hits.push_back({x, yy, true});
    }
  }
  return hits;
}

struct RawMove {
  std::int64_t t;
  std::int64_t m;
  bool operator==(const RawMove&) const = default;
};

// Moves of the take-away game read straight off the rules: pick m in
// [1, Y]; tokens t in [gamma(m-1), gamma m + mp + Gamma] not exceeding X, or
// all X tokens when X < gamma(m-1); taking every match requires the top
// min(Y, X - t) remaining tokens to be white.
inline std::vector<RawMove> takeaway_moves(int gamma, int Gamma, const Background& color, std::int64_t X,
                                           std::int64_t Y, std::int64_t mp) {
  std::vector<RawMove> out;
  for (std::int64_t m = 1; m <= Y; ++m) {
    for (std::int64_t t = 0; t <= X; ++t) {
      const bool normal = gamma * (m - 1) <= t && t <= gamma * m + mp + Gamma;
      const bool all = t == X && X < gamma * (m - 1);
      if (!normal && !all) continue;
      if (m == Y) {
        const std::int64_t left = X - t;
        bool white = true;
        for (std::int64_t k = 0; k < std::min(Y, left); ++k) white = white && color(left - k) == 0;
        if (!white) continue;
      }
      out.push_back({t, m});
    }
  }
  return out;
}

}  // namespace oracle
