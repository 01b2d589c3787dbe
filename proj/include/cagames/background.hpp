#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cagames {

using Bit = std::uint8_t;
using Bits = std::vector<Bit>;

// Parses a string over {0,1}; throws DomainError("malformed-spec") otherwise.
Bits parse_bits(std::string_view text);
std::string format_bits(const Bits& bits);

// The doubly infinite string A = ...LLL C RRR..., shifted by xi.
//
// Anchoring with xi = 0: C occupies x in [1, |C|]; x > |C| reads R cyclically
// starting at R[0]; x <= 0 reads L cyclically leftward, so A(0) is the last
// symbol of L. With a shift, value(x) is the unshifted value at x + xi.
class BackgroundSpec {
 public:
  BackgroundSpec(Bits left, Bits center, Bits right, std::int64_t shift = 0);

  // Convenience for literals: BackgroundSpec::from_strings("0", "", "1").
  static BackgroundSpec from_strings(std::string_view left, std::string_view center,
                                     std::string_view right, std::int64_t shift = 0);

  Bit value(std::int64_t x) const;

  const Bits& left() const { return left_; }
  const Bits& center() const { return center_; }
  const Bits& right() const { return right_; }
  std::int64_t shift() const { return shift_; }

  // Shifted coordinates of the first and last cells of C. When C is empty
  // center_last() == center_first() - 1.
  std::int64_t center_first() const { return 1 - shift_; }
  std::int64_t center_last() const { return static_cast<std::int64_t>(center_.size()) - shift_; }

  // An equivalent spec (same value at every x) whose center covers at least
  // [lo, hi] in shifted coordinates. Used to plant point mutations.
  BackgroundSpec widened(std::int64_t lo, std::int64_t hi) const;

  // An equivalent spec with value(x) flipped at the given coordinate.
  BackgroundSpec with_flipped(std::int64_t x) const;

  // True iff value(x) == 0 for every x <= 0.
  bool zero_at_non_positive() const;

  friend bool operator==(const BackgroundSpec&, const BackgroundSpec&) = default;

 private:
  Bits left_;
  Bits center_;
  Bits right_;
  std::int64_t shift_;
};

}  // namespace cagames
